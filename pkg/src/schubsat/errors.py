"""Exception hierarchy.

Errors fall in three groups, mirrored by the CLI exit codes:

* ``SchubsatError`` subclasses for bad input (exit 1),
* ``LimitError`` subclasses when a configured cap or budget is hit (exit 2),
* ``InternalError`` subclasses when a self-check fails (exit 3).  These
  indicate a bug, never a property of the input.
"""


class SchubsatError(Exception):
    code = "error"


class NotAPermutation(SchubsatError, ValueError):
    code = "not_a_permutation"


class MethodInapplicable(SchubsatError, ValueError):
    code = "method_inapplicable"


class NotHomogeneous(SchubsatError, ValueError):
    code = "not_homogeneous"


class KBelowMaxDescent(SchubsatError, ValueError):
    code = "k_below_max_descent"


class DescentNotCovered(SchubsatError, ValueError):
    code = "descent_not_covered"


class InconsistentBlocks(SchubsatError, ValueError):
    code = "inconsistent_blocks"


class HypothesisViolated(SchubsatError, ValueError):
    code = "hypothesis_violated"


class LimitError(SchubsatError):
    code = "limit"


class CapExceeded(LimitError):
    code = "cap_exceeded"


class SearchBudgetExceeded(LimitError):
    code = "search_budget_exceeded"


class InternalError(SchubsatError):
    code = "internal"


class InternalNonExactDivision(InternalError):
    code = "internal_non_exact_division"


class DivergenceGuard(InternalError):
    code = "divergence_guard"


class NotBitScalable(InternalError):
    code = "not_bit_scalable"


class InvariantFailure(InternalError):
    code = "invariant_failure"
