"""
GdmaLab 命令行

子命令覆盖每个模块：域表、陪集、变换、转码、单帧追踪、香农界、h 参数、
谱码分析、调制解调自检和误码率扫描。

退出码：0 成功，2 用法或配置错误，1 运行时错误。
表格与 CSV 写到 stdout，日志写到 stderr。
"""

import argparse
import math
import sys
from pathlib import Path
from typing import List, Optional, Sequence

from . import __version__
from .config import Settings
from .core.events import Event, EventBus, EventType
from .exceptions import ConfigError, ElementOutOfRangeError, GdmaLabError
from .fields.base import is_prime
from .fields.extension import ExtensionField, format_poly
from .fields.gaussian import GaussianField, gaussian_power_table
from .link import GdmaLink, LinkConfig
from .modem.channel import db_to_linear, linear_to_db
from .modem.constellations import available_constellations, get_constellation
from .modem.selftest import modem_selftest, selftest_csv
from .simulation import MonteCarloHarness, SimulationSpec, write_csv
from .spectral import (
    check_bound,
    cosets,
    enumerate_valid_spectra,
    format_cosets,
    format_gamma,
    spectral_code_analysis,
)
from .transcoder import (
    average_rate,
    builtin_code,
    decode_symbols,
    encode_bits,
    format_h,
    h_param,
)
from .transforms import CasKernel, fourier_transform, hartley_transform
from .utils.i18n import Language, get_i18n, t
from .utils.logging import get_logger, setup_logging

logger = get_logger(__name__)


# ============================================================================
# 参数类型
# ============================================================================


def _prime(text: str) -> int:
    value = _positive(text)
    if not is_prime(value):
        raise argparse.ArgumentTypeError(t("error.p_not_prime", p=value))
    return value


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(t("error.n_positive", n=text)) from None
    if value < 1:
        raise argparse.ArgumentTypeError(t("error.n_positive", n=text))
    return value


def _int_list(text: str) -> List[int]:
    """'1,0,2' 或 '102'"""
    text = text.strip()
    try:
        if "," in text or " " in text:
            return [int(x) for x in text.replace(",", " ").split()]
        return [int(c) for c in text]
    except ValueError:
        raise argparse.ArgumentTypeError(t("error.bad_list", value=text)) from None


def _float_list(text: str) -> List[float]:
    try:
        return [float(x) for x in text.replace(",", " ").split()]
    except ValueError:
        raise argparse.ArgumentTypeError(t("error.bad_list", value=text)) from None


def _name_list(text: str) -> List[str]:
    return [x for x in text.replace(",", " ").split() if x]


def _bits(text: str) -> str:
    cleaned = "".join(text.split())
    if not cleaned or set(cleaned) - {"0", "1"}:
        raise argparse.ArgumentTypeError(t("error.bad_bits", value=text))
    return cleaned


def _ebn0(text: str) -> float:
    if text.strip().lower() in ("inf", "+inf", "none"):
        return math.inf
    try:
        return float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(t("error.bad_list", value=text)) from None


def _modulation(text: str) -> str:
    name = text.lower()
    try:
        return get_constellation(name).name
    except GdmaLabError:
        raise argparse.ArgumentTypeError(
            t("error.unknown_modulation", name=text, known=", ".join(available_constellations()))
        ) from None


# ============================================================================
# 输出格式
# ============================================================================


def _tuple(items: Sequence) -> str:
    return "(" + ", ".join(str(x) for x in items) + ")"


def _labels(field, values) -> str:
    return _tuple(field.power_label(int(v)) for v in values)


# ============================================================================
# 子命令
# ============================================================================


def cmd_field_table(args) -> int:
    if args.gaussian:
        field = GaussianField(args.q)
        print(f"GI({field.q}), ξ = {field.generator}")
        for k, element in enumerate(gaussian_power_table(field)):
            print(f"ξ^{k:<3} {str(element):<6} {element.value}")
        return 0

    field = ExtensionField(args.p, args.m, args.poly)
    print(f"{field!r} mod {format_poly(field.poly)}")
    print(f"{'0':<6} {str(field.zero):<{field.m + 2}} 0")
    for k in range(field.order - 1):
        element = field.alpha_power(k)
        print(f"{element.power_label():<6} {str(element):<{field.m + 2}} {element.value}")
    return 0


def cmd_cosets(args) -> int:
    print(format_cosets(cosets(args.n, args.p)))
    return 0


def _build_transform(args):
    if args.kind == "ffht":
        field = GaussianField(args.q)
        return hartley_transform(CasKernel(field, n=args.n))
    field = ExtensionField(args.p, args.m, args.poly)
    kernel = field.element_of_order(args.n).value if args.n is not None else None
    return fourier_transform(field, kernel)


def cmd_transform(args) -> int:
    transform = _build_transform(args)
    field = transform.field
    limit = field.order if args.inverse else transform.ground_order
    for value in args.values:
        if not 0 <= value < limit:
            raise ElementOutOfRangeError(value, limit)
    print(transform.describe())
    if args.inverse:
        signal = transform.inverse(args.values)
        print(f"V = {_labels(field, args.values)}")
        print(f"v = {_tuple(int(x) for x in signal)}")
    else:
        spectrum = transform.forward(args.values)
        print(f"v = {_tuple(args.values)}")
        print(f"V = {_labels(field, spectrum)}")
        print(f"    {_tuple(int(x) for x in spectrum)}")
    return 0


def cmd_transcode(args) -> int:
    code = builtin_code(args.code)
    if args.action == "encode":
        result = encode_bits(args.bits, code)
        print(" ".join(result.power_labels()))
        print(" ".join(code.format_word(v) for v in result.values))
        print(f"{t('label.symbols')} = {len(result)}, {t('label.pad')} = {result.pad}")
    else:
        print(decode_symbols(args.symbols, code))
    return 0


def _link_config(args) -> LinkConfig:
    return LinkConfig(
        transform=args.transform,
        p=args.p,
        m=1 if args.transform == "identity" else args.m,
        poly=args.poly,
        q=args.q,
        n_users=args.n,
        mode=args.mode,
        code=args.code,
        modulation=args.modulation,
    )


def cmd_frame(args) -> int:
    link = GdmaLink(_link_config(args))
    n, p = link.n_users, link.ground_order
    users = args.users if args.users is not None else [i % p for i in range(n)]
    trace = link.trace_frame(users, ebn0_db=args.ebn0_db, seed=args.seed)
    field, code = link.field, link.code

    rows = [
        ("link", link.config.describe()),
        ("code", f"{code.name}, R = {link.rate:g}, h = {format_h(link.h)}"),
        ("users in", _tuple(int(x) for x in trace.user_symbols_in)),
        ("spectrum", _labels(field, trace.spectrum.values)),
        ("transmitted", _labels(field, trace.transmitted_symbols)),
        ("bits", " ".join(code.format_word(int(v)) for v in trace.transmitted_symbols)),
        (t("label.pad"), str(trace.pad_bits)),
        ("received bits", "".join(str(b) for b in trace.channel_bits_received)),
        ("received", _labels(field, trace.received_symbols)),
        ("spectrum out", _labels(field, trace.spectrum_recovered)),
        ("users out", _tuple(int(x) for x in trace.user_symbols_out)),
        (
            "errors",
            f"spectrum={trace.spectrum_errors} bits={trace.bit_errors} "
            f"undecodable={trace.undecodable} out_of_subfield={trace.out_of_subfield} "
            f"users={trace.user_errors}",
        ),
    ]
    width = max(len(name) for name, _ in rows)
    for name, value in rows:
        print(f"{name:<{width}} : {value}")
    return 0


def cmd_bound(args) -> int:
    if args.gamma is not None:
        gamma = args.gamma
        n_users = args.n
    elif args.n is not None:
        partition = cosets(args.n, args.p)
        gamma = partition.gamma_cc
        n_users = args.n
    else:
        raise argparse.ArgumentTypeError(t("error.bad_gamma"))

    snr = db_to_linear(args.snr_db) if args.snr_db is not None else args.snr
    report = check_bound(gamma, 0.0 if snr is None else snr, args.p, n_users, args.t)

    print(f"gamma_cc = {format_gamma(report.gamma_cc)}")
    print(f"{t('label.min_snr')} = {report.min_snr:g} ({report.min_snr_db:.2f} dB)")
    if snr is not None:
        print(f"SNR = {snr:g} ({linear_to_db(snr):.2f} dB)" if snr > 0 else "SNR = 0")
        print(f"log_p(1 + SNR) = {report.gamma_max:.4f}")
        verdict = t("label.yes") if report.satisfied else t("label.no")
        print(f"{t('label.satisfied')}: {verdict}")
    if report.rate_bits_per_s is not None:
        print(f"{t('label.rate')} = {report.rate_bits_per_s:g} bits/s")
        print(f"{t('label.bandwidth')} = {report.bandwidth_hz:g} Hz")
    return 0


def cmd_hparam(args) -> int:
    code = builtin_code(args.code)
    rate = average_rate(code, args.weighting)
    constellation = get_constellation(args.modulation)
    h = h_param(rate.r, constellation.size)
    print(f"R = {rate.r:g} bits/symbol ({args.weighting})")
    print(f"h = {format_h(h)}")
    return 0


def cmd_code_analysis(args) -> int:
    transform = _build_transform(args)
    report = spectral_code_analysis(enumerate_valid_spectra(transform))
    field = transform.field
    print(transform.describe())
    print(f"{t('label.size')} = {report.size}")
    verdict = t("label.yes") if report.linear else t("label.no")
    print(f"{t('label.linear')} = {verdict} ({report.linear_check})")
    print(f"{t('label.min_distance')} = {report.min_distance}")
    if report.witness_input is not None:
        print(f"{t('label.witness')} v = {_tuple(int(x) for x in report.witness_input)}")
        print(f"{t('label.witness')} V = {_labels(field, report.witness_spectrum)}")
    print(f"(N, size, d) = {report.parameters}")
    return 0


def cmd_modem_selftest(args) -> int:
    rows = modem_selftest(
        esn0_points_db=args.points,
        n_symbols=args.symbols,
        seed=args.seed,
        modulations=args.modulations,
    )
    text = selftest_csv(rows)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
        print(t("sim.wrote", count=len(rows), path=args.out))
    else:
        sys.stdout.write(text)
    return 0


def _progress_logger(event: Event):
    if event.type is EventType.POINT_FINISHED:
        record = event["record"]
        logger.info(
            f"{record.mode}/{record.modulation} {record.ebn0_db} dB: ber={record.ber:.3e}"
        )
    elif event.type is EventType.BUDGET_EXHAUSTED:
        logger.debug(f"budget exhausted at {event['record'].ebn0_db} dB")


def cmd_simulate(args) -> int:
    settings = Settings(args.config) if args.config else Settings()
    overrides = {
        "master_seed": args.seed,
        "workers": args.workers,
        "min_bits": args.min_bits,
        "min_errors": args.min_errors,
        "max_bits": args.max_bits,
        "ebn0_points_db": args.points,
        "modes": args.modes,
        "modulations": args.modulations,
    }
    spec = SimulationSpec.from_settings(settings, overrides)

    bus = EventBus()
    bus.subscribe(EventType.POINT_FINISHED, _progress_logger)
    bus.subscribe(EventType.BUDGET_EXHAUSTED, _progress_logger)
    with MonteCarloHarness(spec, bus) as harness:
        records = harness.sweep()

    if args.out:
        write_csv(records, args.out)
        print(t("sim.wrote", count=len(records), path=args.out))
    else:
        sys.stdout.write(write_csv(records))
    return 0


# ============================================================================
# 解析器
# ============================================================================


def _add_field_args(parser, n_required: bool = False):
    parser.add_argument("--p", type=_prime, default=2, help="characteristic p")
    parser.add_argument("--m", type=_positive, default=4, help="extension degree m")
    parser.add_argument("--poly", type=_int_list, help="primitive polynomial, highest degree first")
    parser.add_argument("--q", type=_prime, default=3, help="GI(q) for the Hartley kernel")
    parser.add_argument("--n", type=_positive, required=n_required, help="length / users N")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gdmalab", description=t("app.description"))
    parser.add_argument("--version", action="version", version=f"gdmalab {__version__}")
    parser.add_argument("--lang", choices=[lang.value for lang in Language], default="en")
    parser.add_argument("--debug", action="store_true", help="verbose logging on stderr")
    parser.add_argument("--log-dir", type=str, help="also write a rotating log file here")
    commands = parser.add_subparsers(dest="command", required=True)

    # field table
    field_cmd = commands.add_parser("field", help="field tables")
    field_sub = field_cmd.add_subparsers(dest="field_command", required=True)
    table = field_sub.add_parser("table", help="power table of GF(p^m) or GI(q)")
    table.add_argument("--p", type=_prime, default=2)
    table.add_argument("--m", type=_positive, default=4)
    table.add_argument("--poly", type=_int_list)
    table.add_argument("--gaussian", action="store_true", help="GI(q) instead of GF(p^m)")
    table.add_argument("--q", type=_prime, default=3)
    table.set_defaults(handler=cmd_field_table)

    # cosets
    coset_cmd = commands.add_parser("cosets", help="cyclotomic cosets and gamma_cc")
    coset_cmd.add_argument("--n", type=_positive, required=True)
    coset_cmd.add_argument("--p", type=_prime, required=True)
    coset_cmd.set_defaults(handler=cmd_cosets)

    # transform
    transform_cmd = commands.add_parser("transform", help="FFFT / FFHT of a vector")
    transform_cmd.add_argument("--kind", choices=["ffft", "ffht"], default="ffft")
    _add_field_args(transform_cmd)
    transform_cmd.add_argument("--values", type=_int_list, required=True)
    transform_cmd.add_argument("--inverse", action="store_true")
    transform_cmd.set_defaults(handler=cmd_transform)

    # transcode
    transcode = commands.add_parser("transcode", help="opportunistic transcoding")
    transcode_sub = transcode.add_subparsers(dest="action", required=True)
    encode = transcode_sub.add_parser("encode")
    encode.add_argument("--code", required=True)
    encode.add_argument("--bits", type=_bits, required=True)
    encode.set_defaults(handler=cmd_transcode)
    decode = transcode_sub.add_parser("decode")
    decode.add_argument("--code", required=True)
    decode.add_argument("--symbols", type=_int_list, required=True)
    decode.set_defaults(handler=cmd_transcode)

    # frame
    frame = commands.add_parser("frame", help="trace one N-GDMA frame")
    frame.add_argument("--transform", choices=["ffft", "ffht", "identity"], default="ffft")
    _add_field_args(frame)
    frame.set_defaults(n=15)
    frame.add_argument("--mode", choices=["FS", "CC"], default="CC")
    frame.add_argument("--code", default="auto")
    frame.add_argument("--modulation", type=_modulation, default="bpsk")
    frame.add_argument("--users", type=_int_list)
    frame.add_argument("--ebn0-db", type=_ebn0, default=math.inf)
    frame.add_argument("--seed", type=int, default=0)
    frame.set_defaults(handler=cmd_frame)

    # bound
    bound = commands.add_parser("bound", help="Shannon bound on the compaction factor")
    bound.add_argument("--gamma", type=float)
    bound.add_argument("--n", type=_positive)
    bound.add_argument("--p", type=_prime, default=2)
    snr = bound.add_mutually_exclusive_group()
    snr.add_argument("--snr", type=float)
    snr.add_argument("--snr-db", type=float)
    bound.add_argument("--t", type=float, help="input symbol duration (s)")
    bound.set_defaults(handler=cmd_bound)

    # hparam
    hparam = commands.add_parser("hparam", help="modulation symbols per Galois symbol")
    hparam.add_argument("--code", required=True)
    hparam.add_argument("--modulation", type=_modulation, required=True)
    hparam.add_argument(
        "--weighting", choices=["uniform-bits", "uniform-symbols"], default="uniform-bits"
    )
    hparam.set_defaults(handler=cmd_hparam)

    # code-analysis
    analysis = commands.add_parser("code-analysis", help="valid-spectrum code parameters")
    analysis.add_argument("--kind", choices=["ffft", "ffht"], default="ffft")
    _add_field_args(analysis)
    analysis.set_defaults(handler=cmd_code_analysis)

    # modem selftest
    modem = commands.add_parser("modem", help="modem checks")
    modem_sub = modem.add_subparsers(dest="modem_command", required=True)
    selftest = modem_sub.add_parser("selftest", help="simulated vs theoretical SER")
    selftest.add_argument("--points", type=_float_list, default=[0.0, 4.0, 8.0])
    selftest.add_argument("--symbols", type=_positive, default=100_000)
    selftest.add_argument("--seed", type=int, default=0)
    selftest.add_argument("--modulations", type=_name_list)
    selftest.add_argument("--out", type=str)
    selftest.set_defaults(handler=cmd_modem_selftest)

    # simulate
    simulate = commands.add_parser("simulate", help="Monte Carlo BER sweep")
    simulate.add_argument("--config", "-c", type=str, help="flat YAML config")
    simulate.add_argument("--seed", type=int)
    simulate.add_argument("--workers", type=_positive)
    simulate.add_argument("--min-bits", type=_positive)
    simulate.add_argument("--min-errors", type=int)
    simulate.add_argument("--max-bits", type=_positive)
    simulate.add_argument("--points", type=_float_list)
    simulate.add_argument("--modes", type=_name_list)
    simulate.add_argument("--modulations", type=_name_list)
    simulate.add_argument("--out", "-o", type=str)
    simulate.set_defaults(handler=cmd_simulate)

    return parser


def _preselect_language(argv: Sequence[str]):
    # --lang 要在构造解析器前生效，帮助文本才会用对应语言
    for i, arg in enumerate(argv):
        code = None
        if arg == "--lang" and i + 1 < len(argv):
            code = argv[i + 1]
        elif arg.startswith("--lang="):
            code = arg.split("=", 1)[1]
        if code:
            get_i18n().set_language_by_code(code)


def dispatch(argv: Optional[Sequence[str]] = None) -> int:
    """
    解析并执行一条命令

    Returns:
        退出码：0 成功，2 用法/配置错误，1 运行时错误
    """
    argv = list(sys.argv[1:] if argv is None else argv)
    _preselect_language(argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2

    get_i18n().set_language_by_code(args.lang)
    setup_logging(debug=args.debug, log_dir=args.log_dir, force=True)

    try:
        return args.handler(args)
    except argparse.ArgumentTypeError as e:
        parser.print_usage(sys.stderr)
        print(t("error.usage", message=e), file=sys.stderr)
        return 2
    except ConfigError as e:
        print(t("error.usage", message=e), file=sys.stderr)
        return 2
    except GdmaLabError as e:
        logger.debug(f"{type(e).__name__}: {e.details}")
        print(t("error.runtime", message=e), file=sys.stderr)
        return 1


def main():
    """主入口"""
    sys.exit(dispatch())


if __name__ == "__main__":
    main()
