"""Flat key=value configuration for the CLI.

One `key = value` per line, `#` comments.  Keys are exactly the nine
below; anything else is rejected by name.  Presets materialize the
scenario triple (field, solenoid length, kinetic energy) and explicit
keys or flags override preset values.
"""

CONFIG_KEYS = (
    "field_tesla",
    "n",
    "l",
    "sigma0_nm",
    "sigma0_prime_over_c",
    "sigma_z_nm",
    "kinetic_energy_kev",
    "solenoid_length_cm",
    "preset",
)

_INT_KEYS = {"n", "l"}
_STR_KEYS = {"preset"}

DEFAULTS = {
    "field_tesla": 1.0,
    "n": 0,
    "l": 10,
    "sigma0_nm": 1000.0,
    "sigma0_prime_over_c": 0.0,
    "sigma_z_nm": 100.0,
    "kinetic_energy_kev": 200.0,
    "solenoid_length_cm": 20.0,
    "preset": "tem",
}

PRESETS = {
    "tem": {"field_tesla": 1.0, "solenoid_length_cm": 20.0, "kinetic_energy_kev": 200.0},
    "linac-1km": {"field_tesla": 1.0, "solenoid_length_cm": 1.0e5,
                  "kinetic_energy_kev": 1.0e6},
    "custom": {},
}


class ConfigError(Exception):
    """Invalid configuration key or value; maps to CLI exit code 2."""


def _convert(key, raw):
    if key in _STR_KEYS:
        value = str(raw).strip()
        if value not in PRESETS:
            raise ConfigError(f"unknown preset '{value}' (choose from {sorted(PRESETS)})")
        return value
    try:
        if key in _INT_KEYS:
            return int(str(raw).strip())
        return float(raw)
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"invalid value for key '{key}': {raw!r}") from exc


def parse_config_file(path):
    """Parse a flat key=value file into a validated dict."""
    values = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            stripped = line.strip()
            if not stripped or stripped.startswith("#"):
                continue
            if "=" not in stripped:
                raise ConfigError(f"{path}:{lineno}: expected 'key = value', got {stripped!r}")
            key, _, raw = stripped.partition("=")
            key = key.strip()
            if key not in CONFIG_KEYS:
                raise ConfigError(f"unknown configuration key '{key}'")
            values[key] = _convert(key, raw.strip())
    return values


def resolve(file_values=None, flag_values=None):
    """Materialize the full configuration: defaults < preset < file < flags."""
    file_values = dict(file_values or {})
    flag_values = {k: v for k, v in (flag_values or {}).items() if v is not None}
    for source in (file_values, flag_values):
        for key in source:
            if key not in CONFIG_KEYS:
                raise ConfigError(f"unknown configuration key '{key}'")

    preset = flag_values.get("preset", file_values.get("preset", DEFAULTS["preset"]))
    preset = _convert("preset", preset)

    config = dict(DEFAULTS)
    config["preset"] = preset
    config.update(PRESETS[preset])
    for key, raw in file_values.items():
        if key != "preset":
            config[key] = _convert(key, raw)
    for key, raw in flag_values.items():
        if key != "preset":
            config[key] = _convert(key, raw)

    _validate(config)
    return config


def _validate(config):
    if config["n"] < 0:
        raise ConfigError("key 'n' must be >= 0")
    if config["sigma0_nm"] <= 0:
        raise ConfigError("key 'sigma0_nm' must be positive")
    if config["sigma_z_nm"] <= 0:
        raise ConfigError("key 'sigma_z_nm' must be positive")
    if config["kinetic_energy_kev"] <= 0:
        raise ConfigError("key 'kinetic_energy_kev' must be positive")
    if config["solenoid_length_cm"] <= 0:
        raise ConfigError("key 'solenoid_length_cm' must be positive")


def header_lines(command, config, extra=None):
    """Comment header echoing the fully resolved configuration."""
    lines = [f"# nslgrad {command}"]
    for key in CONFIG_KEYS:
        lines.append(f"# {key} = {_format_value(config[key])}")
    for key, value in (extra or {}).items():
        lines.append(f"# {key} = {_format_value(value)}")
    return lines


def _format_value(value):
    if isinstance(value, float):
        return f"{value:.9g}"
    return str(value)
