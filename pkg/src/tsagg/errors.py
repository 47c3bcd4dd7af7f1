"""Exception types shared across the package."""


class DataError(ValueError):
    """Input data is malformed: NaN/Inf entries, shape mismatches, bad CSV."""


class ConfigError(ValueError):
    """A requested configuration is out of range or names an unknown option."""
