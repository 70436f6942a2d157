from .problem import Constraint, LPSolution, RationalLP, Status, dump_lp
from .simplex import SimplexTableau, solve
