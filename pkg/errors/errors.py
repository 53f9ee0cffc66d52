class InvalidKupisch(ValueError): # Kupisch data violating the admissibility constraints
    pass

class ZeroAlgebra(ValueError):
    pass

class NotProjectiveInjective(ValueError):
    pass

class DifferentAlgebra(ValueError): # module not valid over the algebra it was passed with
    pass

class NotCyclicConnected(ValueError):
    pass

class NotInDomain(ValueError):
    pass

class NotLinear(ValueError):
    pass

class NotTauTilting(ValueError):
    pass

class ArcTooLong(ValueError):
    pass

class NotTauRigid(ValueError):
    pass

class LoewyTooSmall(ValueError):
    pass

class ArcNotPresent(ValueError):
    pass

class AlgebraTooLarge(Exception):
    pass

class AlgebraSpecError(ValueError): # For input validation errors
    def __init__(self, message: str, line: int = 1, column: int = 1):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column

class MismatchReport(Exception):
    def __init__(self, mismatches: list):
        self.mismatches = list(mismatches)
        lines = "\n".join(str(m) for m in self.mismatches)
        super().__init__(f"{len(self.mismatches)} mismatch(es):\n{lines}")
