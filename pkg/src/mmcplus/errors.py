"""Exception taxonomy shared across the package.

Each class maps to a distinct CLI exit code so callers can script against
failure modes (see :mod:`mmcplus.cli`).
"""


class MmcError(Exception):
    """Base class for all package errors."""

    exit_code = 1


class ConfigError(MmcError):
    """Invalid or inconsistent configuration document."""

    exit_code = 3


class ValidationError(MmcError):
    """Input data violates a declared invariant (stream-level failure)."""

    exit_code = 3


class SchemaMismatchError(MmcError):
    """Stream schema does not match the calibration profile's schema digest."""

    exit_code = 4


class CalibrationInfeasibleError(MmcError):
    """Reference set too small/short to run leave-window-out calibration."""

    exit_code = 5


class CalibrationError(MmcError):
    """Calibration produced an unusable profile (e.g. every weight is zero)."""

    exit_code = 5


class InfeasibleSamplingError(MmcError):
    """A window is too large (or too small) to resample against its reference
    pool; the affected component is reported as unavailable, not fatal."""

    exit_code = 1
