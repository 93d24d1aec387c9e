"""
GdmaLab 国际化单元测试
"""

import pytest

from src.utils.i18n import I18n, Language


class TestI18n:
    """测试翻译查找"""

    @pytest.fixture
    def i18n(self):
        return I18n()

    def test_default_english(self, i18n):
        assert i18n.t("label.symbols") == "symbols"

    def test_chinese(self, i18n):
        i18n.set_language(Language.ZH_CN)
        assert i18n.t("label.pad") == "填充"

    def test_format_arguments(self, i18n):
        assert i18n.t("error.p_not_prime", p=4) == "p must be prime (got 4)"

    def test_missing_argument_returns_template(self, i18n):
        assert i18n.t("error.p_not_prime") == "p must be prime (got {p})"

    def test_unknown_key(self, i18n):
        assert i18n.t("label.nothing") == "label.nothing"

    def test_set_language_by_code(self, i18n):
        assert i18n.set_language_by_code("zh_CN")
        assert i18n.t("label.yes") == "是"
        assert not i18n.set_language_by_code("fr")
        assert i18n.t("label.yes") == "是"
