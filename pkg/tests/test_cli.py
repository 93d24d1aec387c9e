"""
GdmaLab 命令行单元测试

通过 dispatch 直接调用，检查 stdout 与退出码。
"""

import pytest

from src.main import build_parser, dispatch


def run(capsys, *argv):
    code = dispatch(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def line_starting(text, prefix):
    return next(line for line in text.splitlines() if line.startswith(prefix))


class TestParser:
    """测试参数解析"""

    def test_subcommands(self):
        parser = build_parser()
        args = parser.parse_args(["cosets", "--n", "15", "--p", "2"])
        assert args.command == "cosets"
        assert (args.n, args.p) == (15, 2)

    def test_list_arguments(self):
        args = build_parser().parse_args(["transform", "--values", "1,0,1"])
        assert args.values == [1, 0, 1]
        args = build_parser().parse_args(["transform", "--values", "101"])
        assert args.values == [1, 0, 1]

    def test_ebn0_inf(self):
        args = build_parser().parse_args(["frame", "--ebn0-db", "inf"])
        assert args.ebn0_db == float("inf")

    def test_non_prime_is_usage_error(self, capsys):
        code, out, _ = run(capsys, "cosets", "--n", "15", "--p", "4")
        assert code == 2
        assert out == ""

    def test_missing_command(self, capsys):
        code, _, _ = run(capsys)
        assert code == 2

    def test_bad_bits(self, capsys):
        code, _, _ = run(capsys, "transcode", "encode", "--code", "B", "--bits", "10x1")
        assert code == 2


class TestCosetsCommand:
    """测试 cosets 子命令"""

    def test_golden_output(self, capsys):
        code, out, _ = run(capsys, "cosets", "--n", "15", "--p", "2")
        assert code == 0
        assert out.splitlines() == [
            "C0 = (0)",
            "C1 = (1, 2, 4, 8)",
            "C3 = (3, 6, 12, 9)",
            "C5 = (5, 10)",
            "C7 = (7, 14, 13, 11)",
            "nu = 5",
            "gamma_cc = 15/5 = 3",
        ]

    def test_non_coprime_is_runtime_error(self, capsys):
        code, out, err = run(capsys, "cosets", "--n", "6", "--p", "2")
        assert code == 1
        assert out == ""
        assert err


class TestCodingCommands:
    """测试转码与 h 参数子命令"""

    def test_hparam(self, capsys):
        code, out, _ = run(capsys, "hparam", "--code", "B", "--modulation", "qpsk")
        assert code == 0
        assert out.splitlines() == ["R = 3.125 bits/symbol (uniform-bits)", "h = 1.562"]

    def test_hparam_uniform_symbols(self, capsys):
        _, out, _ = run(
            capsys, "hparam", "--code", "B", "--modulation", "bpsk", "--weighting", "uniform-symbols"
        )
        assert out.splitlines()[0].startswith("R = 3.11111 bits/symbol")

    def test_encode(self, capsys):
        code, out, _ = run(capsys, "transcode", "encode", "--code", "A'", "--bits", "1011001101111")
        lines = out.splitlines()
        assert code == 0
        assert lines[0] == "α³ α² α α⁵ α"
        assert lines[-1] == "symbols = 5, pad = 0"

    def test_encode_chinese(self, capsys):
        _, out, _ = run(
            capsys,
            "--lang",
            "zh_CN",
            "transcode",
            "encode",
            "--code",
            "A'",
            "--bits",
            "1011001101111",
        )
        assert out.splitlines()[-1] == "符号 = 5, 填充 = 0"

    def test_decode(self, capsys):
        code, out, _ = run(capsys, "transcode", "decode", "--code", "A'", "--symbols", "6,2,3,5,3")
        assert code == 0
        assert out.strip() == "1011001101111"

    def test_unknown_code(self, capsys):
        code, _, _ = run(capsys, "hparam", "--code", "Z", "--modulation", "qpsk")
        assert code == 1


class TestFieldCommands:
    """测试域表与变换子命令"""

    def test_field_table(self, capsys):
        code, out, _ = run(capsys, "field", "table", "--p", "2", "--m", "3")
        lines = out.splitlines()
        assert code == 0
        assert lines[0].startswith("GF(2^3) mod ")
        assert len(lines) == 1 + 8

    def test_gaussian_table(self, capsys):
        code, out, _ = run(capsys, "field", "table", "--gaussian", "--q", "3")
        lines = out.splitlines()
        assert code == 0
        assert lines[0] == "GI(3), ξ = 1+j"
        assert len(lines) == 1 + 8

    def test_gaussian_table_rejects_residue(self, capsys):
        code, _, _ = run(capsys, "field", "table", "--gaussian", "--q", "5")
        assert code == 1

    def test_transform_all_ones(self, capsys):
        code, out, _ = run(capsys, "transform", "--values", "1" * 15)
        assert code == 0
        assert out.splitlines()[-1].strip() == "(" + ", ".join(["1"] + ["0"] * 14) + ")"

    def test_transform_out_of_range(self, capsys):
        code, _, _ = run(capsys, "transform", "--values", "1,2,0")
        assert code == 1

    def test_code_analysis(self, capsys):
        code, out, _ = run(capsys, "code-analysis", "--m", "3")
        assert code == 0
        assert out.splitlines()[-1] == "(N, size, d) = (7, 128, 1)"


class TestLinkCommands:
    """测试 frame 与 bound 子命令"""

    def test_frame_noiseless(self, capsys):
        code, out, _ = run(capsys, "frame", "--mode", "CC", "--users", "1" * 15)
        assert code == 0
        assert line_starting(out, "users out").endswith("(" + ", ".join(["1"] * 15) + ")")
        assert "spectrum=0 bits=0" in line_starting(out, "errors")

    def test_frame_hartley(self, capsys):
        code, out, _ = run(
            capsys, "frame", "--transform", "ffht", "--n", "8", "--modulation", "qpsk"
        )
        assert code == 0
        assert "B, R = 3.125, h = 1.562" in line_starting(out, "code")

    def test_frame_bad_users(self, capsys):
        code, _, _ = run(capsys, "frame", "--users", "101")
        assert code == 1

    def test_bound(self, capsys):
        code, out, _ = run(capsys, "bound", "--n", "15", "--p", "2", "--snr", "7", "--t", "1")
        assert code == 0
        assert "gamma_cc = 3" in out
        assert "minimum SNR = 7 (8.45 dB)" in out
        assert "satisfied: yes" in out
        assert "rate = 7.5 bits/s" in out
        assert "bandwidth = 2.5 Hz" in out

    def test_bound_unsatisfied(self, capsys):
        _, out, _ = run(capsys, "bound", "--gamma", "3", "--snr-db", "8")
        assert "satisfied: no" in out

    def test_bound_needs_gamma_or_n(self, capsys):
        code, _, _ = run(capsys, "bound", "--snr", "7")
        assert code == 2


class TestSimulationCommands:
    """测试仿真子命令"""

    def test_modem_selftest(self, capsys):
        code, out, _ = run(
            capsys,
            "modem",
            "selftest",
            "--points",
            "6",
            "--symbols",
            "2000",
            "--modulations",
            "bpsk,qpsk",
        )
        lines = out.splitlines()
        assert code == 0
        assert lines[0].startswith("modulation,esn0_db")
        assert [line.split(",")[0] for line in lines[1:]] == ["bpsk", "qpsk"]

    def test_simulate_is_deterministic(self, capsys, config_file):
        argv = ["simulate", "-c", str(config_file), "--points", "2", "--modes", "FS"]
        code, first, _ = run(capsys, *argv)
        _, second, _ = run(capsys, *argv)
        lines = first.splitlines()
        assert code == 0
        assert first == second
        assert lines[0].startswith("mode,modulation,transform,n_users,ebn0_db")
        assert lines[1].startswith("FS,bpsk,ffft,15,2.00,")
        assert len(lines) == 2

    def test_simulate_to_file(self, capsys, config_file, tmp_path):
        target = tmp_path / "ber.csv"
        code, out, _ = run(
            capsys, "simulate", "-c", str(config_file), "--points", "2,6", "-o", str(target)
        )
        assert code == 0
        assert out.strip() == f"wrote 4 records to {target}"
        assert len(target.read_text(encoding="utf-8").splitlines()) == 5

    def test_simulate_config_error(self, capsys, config_file):
        code, out, err = run(capsys, "simulate", "-c", str(config_file), "--min-bits", "10")
        assert code == 2
        assert out == ""
        assert "min_bits" in err

    def test_simulate_missing_config(self, capsys, tmp_path):
        code, _, _ = run(capsys, "simulate", "-c", str(tmp_path / "absent.yaml"))
        assert code == 2

    @pytest.mark.parametrize("modes", ["FS,XX", "fs cc"])
    def test_simulate_modes(self, capsys, config_file, modes):
        code, out, _ = run(
            capsys, "simulate", "-c", str(config_file), "--points", "2", "--modes", modes
        )
        if "XX" in modes:
            assert code == 2
        else:
            assert code == 0
            assert [line.split(",")[0] for line in out.splitlines()[1:]] == ["FS", "CC"]
