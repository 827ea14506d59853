"""Exception types shared across the package."""


class CopychainError(Exception):
    """Base class for all package errors."""


# --- fingerprinting ---

class EncodingError(CopychainError):
    """Input is not decodable text under the declared encoding."""


class EmptyInput(CopychainError):
    """Operation requires non-empty text."""


class DegenerateSamples(CopychainError):
    """Regression samples carry no usable spread in the predictor."""


class NonDecreasingModel(CopychainError):
    """Similarity model does not decrease with distance; a distance cutoff is meaningless."""


class ThresholdUnattainable(CopychainError):
    """No distance cutoff in range reaches the requested similarity floor."""


# --- content store ---

class EmptyBlob(CopychainError):
    """Refusing to store an empty blob."""


class StorageFull(CopychainError):
    """Store capacity limit would be exceeded."""


class NotFound(CopychainError):
    """No blob stored under this address."""


class IntegrityViolation(CopychainError):
    """Stored bytes no longer match their address digest."""


# --- crypto ---

class InvalidCertificate(CopychainError):
    """Certificate failed verification; `side` names the offending party."""

    def __init__(self, side: str, message: str = ""):
        self.side = side
        super().__init__(message or f"invalid certificate: {side}")


class EmptyPlaintext(CopychainError):
    """Refusing to encrypt an empty message."""


class DecryptionFailure(CopychainError):
    """Wrong key or tampered ciphertext."""


# --- ledger ---

class BadSignature(CopychainError):
    """Transaction signature does not verify under the sender's certified key."""


class NonceReplay(CopychainError):
    """Transaction nonce is not strictly greater than the sender's last."""


class CorruptChain(CopychainError):
    """Chain fails validation; refusing to sync from it."""


# --- escrow contract ---

class DuplicateHashId(CopychainError):
    """A record with this exact digest is already registered."""


class InsufficientFunds(CopychainError):
    """Account balance does not cover the requested transfer."""


class UnknownAddress(CopychainError):
    """Address does not resolve to a stored blob."""


class WrongState(CopychainError):
    """Task is not in a state that permits this operation."""


class MalformedRecord(CopychainError):
    """Result record fields do not match its verdict's required shape."""


class UnknownSerial(CopychainError):
    """No registry record with this serial."""


class PastDeadline(CopychainError):
    """Challenge window has closed."""


class NotYetDue(CopychainError):
    """Timeout settlement requested before the deadline."""


class ChallengeLimit(CopychainError):
    """This challenger already used its one challenge on this task."""


# --- cli / simulation ---

class CorpusTooSmall(CopychainError):
    """Calibration corpus has fewer usable texts than requested."""


class ConfigError(CopychainError):
    """Scenario configuration is invalid."""


class ParseError(CopychainError):
    """File contents could not be parsed."""
