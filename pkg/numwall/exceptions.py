class NumwallException(Exception):
    """
    Base class for numwall exceptions
    """


class InvalidConfigKey(NumwallException, ValueError):
    """
    Error raised when trying to use an Invalid Config Key
    """

    def __init__(self, message: str):
        super().__init__(message)


class InvalidModulus(NumwallException, ValueError):
    """
    Error raised when a modulus is not a prime
    """

    def __init__(self, modulus):
        self.modulus = modulus

    def __str__(self):
        return "{modulus} is not a prime modulus".format_map(vars(self))


class WrongDomain(NumwallException, TypeError):
    """
    Error raised when an operation only exists in a prime field but was
    asked of the integers
    """


class DomainMismatch(NumwallException, TypeError):
    """
    Error raised when combining values from two different domains
    """

    def __init__(self, left, right):
        self.left = left
        self.right = right

    def __str__(self):
        return "Cannot combine values of {left} and {right}".format_map(vars(self))


class ZeroInverse(NumwallException, ZeroDivisionError):
    """
    Error raised when inverting zero in a prime field
    """

    def __init__(self):
        super().__init__('Zero has no inverse')


class DivisionByZero(NumwallException, ZeroDivisionError):
    """
    Error raised when dividing by zero
    """

    def __init__(self):
        super().__init__('Division by zero')


class InexactDivision(NumwallException, ArithmeticError):
    """
    Exception raised when an integer division leaves a remainder. Inside a
    number wall this means the wall is corrupted.
    """

    def __init__(self, dividend: int, divisor: int):
        self.dividend = dividend
        self.divisor = divisor

    def __str__(self):
        return "{divisor} does not divide {dividend} exactly".format_map(vars(self))


class InvalidMorphism(NumwallException, ValueError):
    """
    Exception raised when a substitution is not deterministic and of
    constant width
    """


class UnstableSeed(NumwallException):
    """
    Exception raised when the image of the seed symbol does not begin with
    the seed itself
    """

    def __init__(self, seed: str):
        self.seed = seed

    def __str__(self):
        return "Seed {seed} is not stable: its image does not begin with it".format_map(vars(self))


class InvalidSpecFile(NumwallException):
    """
    Exception raised when trying to parse an invalid D0LEC spec file
    """

    def __init__(self, path: str, reason: str):
        self.path = path
        self.reason = reason

    def __str__(self):
        return ("{path} is not a valid sequence spec: "
                "{reason}".format_map(vars(self)))


class InvalidDigitsFile(NumwallException):
    """
    Exception raised when a raw digits file contains something other than
    digits, whitespace and comments
    """

    def __init__(self, path: str, reason: str):
        self.path = path
        self.reason = reason

    def __str__(self):
        return ("{path} is not a valid digits file: "
                "{reason}".format_map(vars(self)))


class UnknownSequence(NumwallException, KeyError):
    """
    Error raised when asking for a builtin sequence that does not exist
    """

    def __init__(self, name: str, known):
        self.name = name
        self.known = ', '.join(sorted(known))

    def __str__(self):
        return 'Unknown sequence "{name}". Known sequences: {known}'.format_map(vars(self))


class OutOfRange(NumwallException, IndexError):
    """
    Error raised when a term or an entry outside the available range is
    requested
    """


class WallZeroDivision(NumwallException, ZeroDivisionError):
    """
    Raised by the plain Sylvester recursion when it meets a zero divisor it
    cannot get around
    """

    def __init__(self, m: int, n: int):
        self.m = m
        self.n = n

    def __str__(self):
        return "Division by zero computing entry m={m}, n={n}".format_map(vars(self))


class InternalInconsistency(NumwallException):
    """
    Exception raised when a frame law fails while crossing a window
    """


class IncompleteFrame(NumwallException):
    """
    Exception raised when a window frame is needed but part of it lies
    outside the computed wall
    """


class InvalidWallDump(NumwallException):
    """
    Exception raised when trying to read an invalid wall dump
    """

    def __init__(self, path: str, reason: str):
        self.path = path
        self.reason = reason

    def __str__(self):
        return ("{path} is not a valid wall dump: "
                "{reason}".format_map(vars(self)))


class TooSmallRegion(NumwallException):
    """
    Raised when no window size bin of a census reaches an expected count of 5
    """


class EffortExhausted(NumwallException):
    """
    Raised when a search runs out of its node budget. The best word found so
    far travels with the exception.
    """

    def __init__(self, best_word, best_report, nodes: int):
        self.best_word = best_word
        self.best_report = best_report
        self.nodes = nodes

    def __str__(self):
        return "Search gave up after {nodes} nodes".format_map(vars(self))


class InvalidTileData(NumwallException):
    """
    Exception raised when trying to parse an invalid tile data file
    """

    def __init__(self, path: str, reason: str):
        self.path = path
        self.reason = reason

    def __str__(self):
        return ("{path} is not valid tile data: "
                "{reason}".format_map(vars(self)))


class OverlapConflict(NumwallException):
    """
    Exception raised when two tiles paint different values onto a shared
    wall entry
    """

    def __init__(self, position, existing: int, new: int):
        self.position = position
        self.existing = existing
        self.new = new

    def __str__(self):
        return ("Tiles disagree at {position}: "
                "{existing} versus {new}".format_map(vars(self)))


class SeedNotStable(NumwallException):
    """
    Exception raised when no self-reproducing placement matches the wall
    around the tiling origin
    """


class ReducibleAmbiguity(NumwallException):
    """
    Exception raised when the substitution matrix has no unique bulk class
    """
