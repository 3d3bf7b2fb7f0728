"""Exception hierarchy shared by every module."""


class GammaRoughError(Exception):
    """Base class for all errors raised by gammarough."""


class UnknownNameError(GammaRoughError, KeyError):
    """An element, gamma, structure or map name does not resolve."""

    def __init__(self, kind, name):
        self.kind = kind
        self.name = name
        super().__init__(f"unknown {kind} {name!r}")

    def __str__(self):
        return self.args[0]


class StructureMismatchError(GammaRoughError, ValueError):
    """Operands belong to different carriers."""


class NotAssociativeError(GammaRoughError, ValueError):
    """A structure loaded in checked mode failed the associativity law."""

    def __init__(self, name, report):
        self.report = report
        w = report.witnesses[0]
        super().__init__(
            f"structure {name!r} is not a Gamma-semigroup: "
            f"({w.a} {w.alpha} {w.b}) {w.beta} {w.c} = {w.left} but "
            f"{w.a} {w.alpha} ({w.b} {w.beta} {w.c}) = {w.right}"
        )


class EmptySubsetError(GammaRoughError, ValueError):
    """A predicate that is only defined for non-empty subsets got the empty set."""


class NotACongruenceError(GammaRoughError, ValueError):
    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"partition is not a congruence: {witness}")


class BudgetError(GammaRoughError, ValueError):
    """An exhaustive run would exceed the allowed instance budget."""

    def __init__(self, required, budget):
        self.required = required
        self.budget = budget
        super().__init__(
            f"exhaustive run needs {required} instances, budget is {budget}"
        )


class UnknownTheoremError(GammaRoughError, KeyError):
    def __init__(self, theorem_id):
        self.theorem_id = theorem_id
        super().__init__(f"unknown theorem id {theorem_id!r}")

    def __str__(self):
        return self.args[0]


class ParamShapeError(GammaRoughError, ValueError):
    """Audit parameters do not match the shape a theorem's hypothesis needs."""


class ParseError(GammaRoughError, ValueError):
    """A grs1 document is malformed. Carries the 1-based line number."""

    def __init__(self, message, line):
        self.line = line
        self.message = message
        super().__init__(f"line {line}: {message}")
