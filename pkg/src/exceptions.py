"""
GdmaLab 自定义异常类

按功能区域分组，所有异常都携带 details 字典以便调试。
"""


class GdmaLabError(Exception):
    """GdmaLab 基础异常类"""

    def __init__(self, message: str = "", details: dict = None):
        self.message = message
        self.details = details or {}
        super().__init__(self.message)

    def __str__(self):
        if self.details:
            detail_str = ", ".join(f"{k}={v}" for k, v in self.details.items())
            return f"{self.message} ({detail_str})"
        return self.message


# ============================================================================
# 有限域
# ============================================================================


class FieldError(GdmaLabError):
    """有限域相关错误"""

    pass


class NonPrimeModulusError(FieldError):
    """模数不是素数"""

    def __init__(self, p: int):
        super().__init__(f"p 必须是素数: {p}", {"p": p})


class InvalidPolynomialError(FieldError):
    """多项式格式无效"""

    def __init__(self, poly, reason: str = ""):
        message = f"多项式无效: {poly}"
        if reason:
            message += f" - {reason}"
        super().__init__(message, {"poly": poly, "reason": reason})


class NonPrimitivePolynomialError(FieldError):
    """多项式不是本原多项式"""

    def __init__(self, poly, order: int, expected: int):
        super().__init__(
            f"多项式不是本原多项式: ord(x) = {order} < {expected}",
            {"poly": poly, "order": order, "expected": expected},
        )


class FieldMismatchError(FieldError):
    """操作数属于不同的域"""

    def __init__(self, left, right):
        super().__init__(
            f"操作数属于不同的域: {left} 与 {right}",
            {"left": str(left), "right": str(right)},
        )


class DivisionByZeroError(FieldError):
    """除以零或对零求逆"""

    def __init__(self, operation: str = "div"):
        super().__init__(f"零元素没有逆元 ({operation})", {"operation": operation})


class ZeroElementError(FieldError):
    """零元素没有乘法阶"""

    def __init__(self, operation: str = "order"):
        super().__init__(f"零元素不支持该操作: {operation}", {"operation": operation})


class MinusOneIsResidueError(FieldError):
    """-1 是 GF(q) 中的二次剩余，GI(q) 不构成域"""

    def __init__(self, q: int, root: int):
        super().__init__(
            f"-1 是 GF({q}) 的二次剩余 ({root}^2 = -1)",
            {"q": q, "root": root},
        )


class EvenCharacteristicError(FieldError):
    """要求奇特征"""

    def __init__(self, p: int):
        super().__init__(f"要求奇特征，实际特征为 {p}", {"p": p})


class ElementOutOfRangeError(FieldError):
    """元素编码超出域范围"""

    def __init__(self, value, order: int):
        super().__init__(
            f"元素 {value} 超出域范围 [0, {order})",
            {"value": value, "order": order},
        )


# ============================================================================
# 变换
# ============================================================================


class TransformError(GdmaLabError):
    """有限域变换相关错误"""

    pass


class LengthMismatchError(TransformError):
    """向量长度与核的阶不一致"""

    def __init__(self, expected: int, actual: int, what: str = "vector"):
        super().__init__(
            f"{what} 长度不匹配: 期望 {expected}，实际 {actual}",
            {"expected": expected, "actual": actual, "what": what},
        )


class NonInvertibleLengthError(TransformError):
    """N 在 GF(p) 中不可逆"""

    def __init__(self, n: int, p: int):
        super().__init__(f"N = {n} 在 GF({p}) 中不可逆", {"n": n, "p": p})


class SingularKernelMatrixError(TransformError):
    """核矩阵奇异"""

    def __init__(self, n: int, column: int):
        super().__init__(
            f"{n}x{n} 核矩阵奇异 (第 {column} 列无主元)",
            {"n": n, "column": column},
        )


# ============================================================================
# 分圆陪集 / 界
# ============================================================================


class SpectralError(GdmaLabError):
    """分圆压缩与频谱分析相关错误"""

    pass


class NonCoprimeLengthError(SpectralError):
    """gcd(N, p) != 1"""

    def __init__(self, n: int, p: int):
        super().__init__(f"N = {n} 与 p = {p} 不互素", {"n": n, "p": p})


class InvalidSpectrumError(SpectralError):
    """频谱不满足共轭约束"""

    def __init__(self, index: int, reason: str = ""):
        message = f"频谱在分量 {index} 处违反共轭约束"
        if reason:
            message += f": {reason}"
        super().__init__(message, {"index": index, "reason": reason})


class NegativeSnrError(SpectralError):
    """信噪比为负"""

    def __init__(self, snr: float):
        super().__init__(f"SNR 不能为负: {snr}", {"snr": snr})


class NonPositiveDurationError(SpectralError):
    """符号周期必须为正"""

    def __init__(self, duration: float):
        super().__init__(f"符号周期必须为正: {duration}", {"duration": duration})


class EnumerationTooLargeError(SpectralError):
    """枚举空间过大"""

    def __init__(self, size: int, limit: int):
        super().__init__(
            f"枚举空间 {size} 超过上限 {limit}",
            {"size": size, "limit": limit},
        )


# ============================================================================
# 转码器
# ============================================================================


class TranscoderError(GdmaLabError):
    """二进制到 p 元转码相关错误"""

    pass


class UnknownCodeError(TranscoderError):
    """未知的码表名称"""

    def __init__(self, name: str):
        super().__init__(f"未知码表: {name}", {"name": name})


class NotPowerOfTwoError(TranscoderError):
    """字母表大小不是 2 的幂"""

    def __init__(self, size: int):
        super().__init__(f"字母表大小 {size} 不是 2 的幂", {"size": size})


class NonInstantaneousCodeError(TranscoderError):
    """码不是即时码（非前缀码）"""

    def __init__(self, name: str, word: str = "", prefix_of: str = ""):
        super().__init__(
            f"码 '{name}' 不是即时码",
            {"name": name, "word": word, "prefix_of": prefix_of},
        )


class UnparseableBitsError(TranscoderError):
    """比特串无法解析"""

    def __init__(self, position: int, fragment: str = ""):
        super().__init__(
            f"比特串在位置 {position} 无法解析",
            {"position": position, "fragment": fragment},
        )


class UnknownSymbolError(TranscoderError):
    """符号不在码的字母表中"""

    def __init__(self, symbol, code: str):
        super().__init__(
            f"符号 {symbol} 不在码 '{code}' 的字母表中",
            {"symbol": str(symbol), "code": code},
        )


class IncompleteCodeError(TranscoderError):
    """码不完备（Kraft 和不为 1）"""

    def __init__(self, name: str, kraft_sum):
        super().__init__(
            f"码 '{name}' 不完备: Kraft 和 = {kraft_sum}",
            {"name": name, "kraft_sum": str(kraft_sum)},
        )


# ============================================================================
# 调制解调
# ============================================================================


class ModemError(GdmaLabError):
    """调制解调相关错误"""

    pass


class InvalidConstellationSizeError(ModemError):
    """星座大小无效"""

    def __init__(self, size):
        super().__init__(f"星座大小必须是 >= 2 的 2 的幂: {size}", {"size": size})


class UnknownConstellationError(ModemError):
    """未知的调制方式"""

    def __init__(self, name: str):
        super().__init__(f"未知调制方式: {name}", {"name": name})


# ============================================================================
# GDMA 链路
# ============================================================================


class LinkError(GdmaLabError):
    """GDMA 链路相关错误"""

    pass


class ConfigInvalidError(LinkError):
    """链路配置无效"""

    def __init__(self, reason: str, **details):
        super().__init__(f"链路配置无效: {reason}", {"reason": reason, **details})


class FrameLengthMismatchError(LinkError):
    """帧长度与配置不一致"""

    def __init__(self, expected, actual: int):
        super().__init__(
            f"帧长度不匹配: 期望 {expected}，实际 {actual}",
            {"expected": expected, "actual": actual},
        )


class UndecodableSymbolError(LinkError):
    """接收比特无法映射为码字"""

    def __init__(self, position: int, count: int = 1):
        super().__init__(
            f"位置 {position} 起有 {count} 个符号无法译码",
            {"position": position, "count": count},
        )


class InvalidProbabilityError(LinkError):
    """概率超出 [0, 1]"""

    def __init__(self, value: float):
        super().__init__(f"概率必须位于 [0, 1]: {value}", {"value": value})


# ============================================================================
# 蒙特卡洛仿真
# ============================================================================


class SimulationError(GdmaLabError):
    """仿真相关错误"""

    pass


class BudgetExhaustedError(SimulationError):
    """达到比特上限仍未收集到足够错误"""

    def __init__(self, ebn0_db: float, bits: int, errors: int, min_errors: int):
        super().__init__(
            f"Eb/N0 = {ebn0_db} dB 处预算耗尽: {errors}/{min_errors} 个错误",
            {
                "ebn0_db": ebn0_db,
                "bits": bits,
                "errors": errors,
                "min_errors": min_errors,
            },
        )


# ============================================================================
# 配置
# ============================================================================


class ConfigError(GdmaLabError):
    """配置相关错误"""

    pass


class ConfigNotFoundError(ConfigError):
    """配置文件未找到"""

    def __init__(self, path: str):
        super().__init__(f"配置文件未找到: {path}", {"path": path})


class ConfigParseError(ConfigError):
    """配置文件解析错误"""

    def __init__(self, path: str, reason: str = ""):
        message = f"配置文件解析失败: {path}"
        if reason:
            message += f" - {reason}"
        super().__init__(message, {"path": path, "reason": reason})


class ConfigValidationError(ConfigError):
    """配置验证错误"""

    def __init__(self, key: str, value, reason: str = ""):
        message = f"配置项 '{key}' 值无效: {value}"
        if reason:
            message += f" - {reason}"
        super().__init__(message, {"key": key, "value": value, "reason": reason})
