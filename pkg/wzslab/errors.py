"""
Exception hierarchy for the laboratory

Every error carries the process exit code the CLI should return:
1 for usage / input problems, 2 for a configured cap being exceeded.
"""

class WzsError(Exception):
    """Base class of all laboratory errors"""
    exit_code = 1

class CapExceeded(WzsError):
    """A configured computation cap was exceeded"""
    exit_code = 2

    def __init__(self, cap_name, limit, requested):
        self.cap_name = cap_name
        self.limit = limit
        self.requested = requested
        super().__init__(f"{cap_name} exceeded: requested {requested}, cap is {limit}")

class OrderCapExceeded(CapExceeded):
    def __init__(self, limit, requested, cap_name='order cap'):
        super().__init__(cap_name, limit, requested)

class ConfigError(WzsError, ValueError):
    pass

class ParseError(WzsError, ValueError):
    """Malformed literal; remembers where it went wrong (1-based)"""

    def __init__(self, message, text='', line=1, column=1):
        self.text = text
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")

# Groups
class InvalidFactor(WzsError, ValueError):
    pass

class GroupMismatch(WzsError, ValueError):
    pass

# Sequences and monoids
class NotInMonoid(WzsError, ValueError):
    pass

class NotASubsequence(WzsError, ValueError):
    pass

class NotAnAtom(WzsError, ValueError):
    pass

class HandleMismatch(WzsError, ValueError):
    pass

class HypothesisNotMet(WzsError, ValueError):
    pass

class OutOfRange(WzsError, ValueError):
    pass

# Structure
class WeightSetLacksPM(HypothesisNotMet):
    pass

class WeightSetNotGroup(HypothesisNotMet):
    pass

class GroupShapeUnsupported(HypothesisNotMet):
    pass

# Quadratic forms
class NotPrimitive(WzsError, ValueError):
    pass

class WrongSign(WzsError, ValueError):
    pass

class DiscriminantMismatch(WzsError, ValueError):
    pass

class CompositionInconsistent(WzsError, AssertionError):
    pass

class PrimeDividesConductor(WzsError, ValueError):
    pass

class NotInNPrime(WzsError, ValueError):
    pass

class NotInRcirc(WzsError, ValueError):
    pass

class VerificationFailed(WzsError, AssertionError):
    """A computed witness or oracle comparison did not hold"""
    exit_code = 3
