"""
GdmaLab 配置单元测试
"""

import pytest
import yaml

from src.config import DEFAULT_CONFIG, ConfigValidator, Settings, fix_config, validate_config
from src.exceptions import ConfigNotFoundError, ConfigParseError
from src.simulation import SimulationSpec


class TestSettings:
    """测试配置加载"""

    def test_defaults_only(self):
        settings = Settings()
        assert settings.config == DEFAULT_CONFIG
        assert settings.n_users == 15
        assert settings.ebn0_points_db == [0.0, 2.0, 4.0, 6.0, 8.0, 10.0]

    def test_defaults_are_copied(self):
        settings = Settings()
        settings.config["modes"].append("CC")
        assert DEFAULT_CONFIG["modes"] == ["FS", "CC"]

    def test_load_file(self, config_file):
        settings = Settings(str(config_file))
        assert settings.get("min_bits") == 5000
        assert settings.master_seed == 7
        assert settings.get("transform") == "ffft"

    def test_missing_file(self, tmp_path):
        with pytest.raises(ConfigNotFoundError):
            Settings(str(tmp_path / "absent.yaml"))

    def test_missing_file_optional(self, tmp_path):
        settings = Settings(str(tmp_path / "absent.yaml"), required=False)
        assert settings.config == DEFAULT_CONFIG

    def test_parse_error(self, tmp_path):
        path = tmp_path / "broken.yaml"
        path.write_text("modes: [FS, CC\n", encoding="utf-8")
        with pytest.raises(ConfigParseError):
            Settings(str(path))

    def test_top_level_must_be_mapping(self, tmp_path):
        path = tmp_path / "list.yaml"
        path.write_text("- 1\n- 2\n", encoding="utf-8")
        with pytest.raises(ConfigParseError):
            Settings(str(path))

    def test_get_set(self):
        settings = Settings()
        settings.workers = 4
        assert settings.get("workers") == 4
        settings.set("extra.depth", 2)
        assert settings.get("extra.depth") == 2
        assert settings.get("extra.missing", "x") == "x"
        settings.reset()
        assert settings.workers == 1

    def test_save_roundtrip(self, config_file, tmp_path):
        settings = Settings(str(config_file))
        settings.master_seed = 99
        target = tmp_path / "saved" / "out.yaml"
        settings.save(str(target))
        reloaded = yaml.safe_load(target.read_text(encoding="utf-8"))
        assert reloaded["master_seed"] == 99
        assert Settings(str(target)).config == settings.config

    def test_save_without_path(self):
        with pytest.raises(ConfigNotFoundError):
            Settings().save()

    def test_spec_from_settings(self, config_file):
        spec = SimulationSpec.from_settings(Settings(str(config_file)), {"workers": 2})
        assert spec.workers == 2
        assert spec.stop.min_bits == 5000
        assert spec.frames_per_block == 64


class TestValidator:
    """测试配置验证"""

    def test_defaults_pass(self, config_validator):
        assert config_validator.validate(dict(DEFAULT_CONFIG)) == []

    def test_unknown_key_in_strict_mode(self, config_validator, sample_config):
        sample_config["plot_style"] = {}
        errors = config_validator.validate(sample_config)
        assert [e.key for e in errors] == ["plot_style"]

    def test_unknown_key_allowed_when_lenient(self, sample_config):
        sample_config["notes"] = "lab run"
        assert validate_config(sample_config) == []

    def test_missing_required(self, config_validator, sample_config):
        del sample_config["n_users"]
        errors = config_validator.validate(sample_config)
        assert errors[0].key == "n_users"

    def test_bool_is_not_int(self, config_validator, sample_config):
        sample_config["workers"] = True
        errors = config_validator.validate(sample_config)
        assert [e.key for e in errors] == ["workers"]

    def test_bool_accepted_where_declared(self, config_validator, sample_config):
        sample_config["strict_budget"] = True
        assert config_validator.validate(sample_config) == []

    @pytest.mark.parametrize(
        "key, value",
        [
            ("transform", "dft"),
            ("p", 4),
            ("min_bits", 10),
            ("energy_convention", "per_user"),
            ("modes", ["FS", "XX"]),
            ("modulations", ["256qam"]),
            ("ebn0_points_db", []),
            ("poly", "x^4+x+1"),
        ],
    )
    def test_rule_errors(self, config_validator, sample_config, key, value):
        sample_config[key] = value
        errors = config_validator.validate(sample_config)
        assert errors and errors[0].key == key

    def test_points_must_increase(self, config_validator, sample_config):
        sample_config["ebn0_points_db"] = [4.0, 2.0]
        errors = config_validator.validate(sample_config)
        assert [e.key for e in errors] == ["ebn0_points_db"]

    def test_max_bits_below_min_bits(self, config_validator, sample_config):
        sample_config["max_bits"] = 4000
        errors = config_validator.validate(sample_config)
        assert [e.key for e in errors] == ["max_bits"]

    def test_small_blocks_warn(self, config_validator, sample_config):
        sample_config.update(workers=4, frames_per_block=8)
        errors = config_validator.validate(sample_config)
        assert [(e.key, e.severity) for e in errors] == [("frames_per_block", "warning")]

    def test_warning_does_not_block_spec(self, sample_config):
        sample_config.update(workers=2, frames_per_block=8)
        assert SimulationSpec.from_settings(sample_config).frames_per_block == 8

    def test_fix_config(self):
        fixed = fix_config({"workers": 1000, "min_bits": 1})
        assert fixed["workers"] == 256
        assert fixed["min_bits"] == 1000
        assert fixed["n_users"] == 15

    def test_get_defaults(self):
        defaults = ConfigValidator().get_defaults()
        assert defaults["energy_convention"] == "information_bit"
        assert "poly" not in defaults
