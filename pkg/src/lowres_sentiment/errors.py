"""Exception hierarchy.

``InputError`` subclasses map to CLI exit code 2, ``ModelLoadError`` to 3 and
``RuntimeFailure`` to 4.
"""


class SentimentError(Exception):
    pass


class InputError(SentimentError, ValueError):
    pass


class MissingFileError(InputError):
    def __init__(self, path):
        super().__init__(f"MissingFile: {path}")
        self.path = path


class MalformedRowError(InputError):
    def __init__(self, line, reason="malformed row"):
        super().__init__(f"MalformedRow at line {line}: {reason}")
        self.line = line


class UnknownLabelError(InputError):
    def __init__(self, value):
        super().__init__(f"UnknownLabel: {value!r}")
        self.value = value


class DuplicateIdError(InputError):
    def __init__(self, doc_id):
        super().__init__(f"DuplicateId: {doc_id}")
        self.doc_id = doc_id


class FractionOutOfRangeError(InputError):
    pass


class CorpusTooSmallError(InputError):
    pass


class EmptySweepError(InputError):
    pass


class EmptyStopwordListError(InputError):
    pass


class EmptyCorpusError(InputError):
    pass


class UnknownTermError(InputError, KeyError):
    def __str__(self):
        return f"UnknownTerm: {self.args[0]!r}"


class MissingClassError(InputError):
    pass


class KTooLargeError(InputError):
    pass


class UnknownMethodError(InputError):
    pass


class LengthMismatchError(InputError):
    pass


class EmptyInputError(InputError):
    pass


class ConfigError(InputError):
    pass


class ModelLoadError(SentimentError):
    pass


class RuntimeFailure(SentimentError):
    pass


class NonFiniteLossError(RuntimeFailure, FloatingPointError):
    pass
