"""
GdmaLab 国际化 (i18n) 模块

CLI 面向用户的提示文本。表格里的数学记号（α、ξ、gamma_cc）不翻译。
"""

from enum import Enum
from typing import Dict, Optional


class Language(Enum):
    """支持的语言"""

    EN = "en"
    ZH_CN = "zh_CN"


TRANSLATIONS: Dict[str, Dict[str, str]] = {
    # ========== 应用信息 ==========
    "app.description": {
        "en": "GdmaLab - Galois-Division Multiple Access laboratory",
        "zh_CN": "GdmaLab - Galois 分多址实验室",
    },
    # ========== 参数校验 ==========
    "error.p_not_prime": {
        "en": "p must be prime (got {p})",
        "zh_CN": "p 必须是素数（输入 {p}）",
    },
    "error.n_positive": {
        "en": "n must be a positive integer (got {n})",
        "zh_CN": "n 必须是正整数（输入 {n}）",
    },
    "error.bad_list": {
        "en": "cannot parse integer list: {value}",
        "zh_CN": "无法解析整数列表: {value}",
    },
    "error.bad_bits": {
        "en": "bit string may only contain 0 and 1: {value}",
        "zh_CN": "比特串只能包含 0 和 1: {value}",
    },
    "error.unknown_modulation": {
        "en": "unknown modulation {name} (choose from {known})",
        "zh_CN": "未知调制方式 {name}（可选 {known}）",
    },
    "error.bad_gamma": {
        "en": "give --gamma or --n",
        "zh_CN": "请给出 --gamma 或 --n",
    },
    "error.runtime": {
        "en": "error: {message}",
        "zh_CN": "错误: {message}",
    },
    "error.usage": {
        "en": "usage error: {message}",
        "zh_CN": "用法错误: {message}",
    },
    # ========== 输出标签 ==========
    "label.symbols": {"en": "symbols", "zh_CN": "符号"},
    "label.pad": {"en": "pad", "zh_CN": "填充"},
    "label.satisfied": {"en": "satisfied", "zh_CN": "满足"},
    "label.yes": {"en": "yes", "zh_CN": "是"},
    "label.no": {"en": "no", "zh_CN": "否"},
    "label.min_snr": {"en": "minimum SNR", "zh_CN": "最小 SNR"},
    "label.rate": {"en": "rate", "zh_CN": "速率"},
    "label.bandwidth": {"en": "bandwidth", "zh_CN": "带宽"},
    "label.size": {"en": "size", "zh_CN": "码字数"},
    "label.linear": {"en": "linear", "zh_CN": "线性"},
    "label.min_distance": {"en": "minimum distance", "zh_CN": "最小距离"},
    "label.witness": {"en": "witness", "zh_CN": "见证"},
    # ========== 仿真进度 ==========
    "sim.wrote": {
        "en": "wrote {count} records to {path}",
        "zh_CN": "已写出 {count} 条记录到 {path}",
    },
}


class I18n:
    """
    国际化管理器

    Example:
        >>> i18n = I18n()
        >>> i18n.set_language(Language.ZH_CN)
        >>> i18n.t("label.symbols")
        '符号'
    """

    def __init__(self, default_language: Language = Language.EN):
        self._language = default_language
        self._translations = TRANSLATIONS.copy()
        self._fallback_language = Language.EN

    def set_language(self, language: Language):
        """设置语言"""
        self._language = language

    def set_language_by_code(self, code: str) -> bool:
        """
        通过语言代码设置语言

        Returns:
            是否设置成功
        """
        for lang in Language:
            if lang.value == code:
                self.set_language(lang)
                return True
        return False

    def t(self, key: str, **kwargs) -> str:
        """
        翻译文本

        缺少当前语言时回退到英文，缺少键时返回键本身。
        """
        entry = self._translations.get(key)
        if entry is None:
            return key
        text = entry.get(self._language.value) or entry.get(
            self._fallback_language.value, key
        )
        if kwargs:
            try:
                return text.format(**kwargs)
            except (KeyError, IndexError):
                return text
        return text


_global_i18n: Optional[I18n] = None


def get_i18n() -> I18n:
    """获取全局 i18n 实例"""
    global _global_i18n
    if _global_i18n is None:
        _global_i18n = I18n()
    return _global_i18n


def t(key: str, **kwargs) -> str:
    """便捷翻译函数"""
    return get_i18n().t(key, **kwargs)
