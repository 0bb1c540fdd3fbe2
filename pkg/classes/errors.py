"""
Exception hierarchy for the sampler.

Every error raised on purpose by the package derives from PLPError and carries
the process exit code the command line front end reports for it:

- 2: usage errors (bad flags, N <= 0, conflicting modes)
- 3: program text that fails to parse or violates a load-time invariant
- 4: runtime failures (evaluation, sampling, exact inference)
"""


class PLPError(Exception):
    exit_code = 4

    def __init__(self, message):
        super().__init__(message)
        self.message = message


class UsageError(PLPError):
    exit_code = 2


class PLPSyntaxError(PLPError):
    exit_code = 3

    def __init__(self, message, line, column):
        super().__init__(f"{message} at line {line}, column {column}")
        self.line = line
        self.column = column
        self.reason = message

    def __reduce__(self):
        return type(self), (self.reason, self.line, self.column)


class ProgramError(PLPError):
    exit_code = 3


class EvaluationError(PLPError):
    pass


class UnknownSwitchError(EvaluationError):
    pass


class MissingDistributionError(EvaluationError):
    pass


class StepLimitExceeded(EvaluationError):
    pass


class EvidenceUnsatisfiable(PLPError):
    pass


class BranchLimitExceeded(PLPError):
    pass


class WorldLimitExceeded(PLPError):
    pass


class NoConsistentSamples(PLPError):
    pass


class SamplerError(PLPError):
    pass
