"""Exception types raised across the pipeline."""


class NutriCompassError(Exception):
    """Base class for all library errors."""


class ConfigError(NutriCompassError):
    """Bad or inconsistent configuration (unknown keys, missing paths, bad values)."""


# --- ingest ---

class MissingColumnError(NutriCompassError):
    """A column named in the table schema is absent from the file header."""


class EmptyFileError(NutriCompassError):
    """Input file has no header or no content."""


class JoinEmptyError(NutriCompassError):
    """Inner join across source tables produced no records."""


class NearZeroEnergyError(NutriCompassError):
    """Energy density below 1 kcal/100 g; record cannot be put on a 100 kcal basis."""


# --- augment ---

class ModifierAlreadyPresentError(NutriCompassError):
    """The modifier word already occurs in the description."""


# --- featurizer ---

class EmptyCorpusError(NutriCompassError):
    """Fitting requires at least one document."""


class UnknownTextError(NutriCompassError):
    """Text not present in a file-backed embedding lookup."""


class UnknownTargetError(NutriCompassError):
    """Target key is not in the registry / heuristic spec."""


class DimensionMismatchError(NutriCompassError):
    """Vector segment lengths do not match the fitted featurizer."""


class TooFewRowsError(NutriCompassError):
    """Not enough rows for the requested fit."""


class InvalidEmbeddingFileError(NutriCompassError):
    """Embedding file row has the wrong shape or an unparseable value."""


class FingerprintMismatchError(NutriCompassError):
    """Model was trained against a different featurizer state."""


# --- neural ---

class ShapeMismatchError(NutriCompassError):
    """Array shapes inconsistent with the model configuration."""


class EmptyBatchError(NutriCompassError):
    """Loss over an empty batch is undefined."""


class StaleCacheError(NutriCompassError):
    """Backward pass called with a cache from different parameters."""


class MissingModelError(NutriCompassError):
    """A target required by the scorer has no trained model in the bundle."""


class VersionMismatchError(NutriCompassError):
    """Serialized model format version is not supported."""


class CorruptFileError(NutriCompassError):
    """Model file failed its checksum or is truncated."""


# --- scoring ---

class MissingTargetError(NutriCompassError):
    """Profile lacks a value required by the scoring tables."""


class InvalidBasisError(NutriCompassError):
    """Scoring requires a per-100-kcal profile."""


# --- validation ---

class ConstantInputError(NutriCompassError):
    """Pearson correlation is undefined for a constant vector."""


class EmptyDatasetError(NutriCompassError):
    """No usable rows in the dataset."""
