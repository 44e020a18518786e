from .models import Potential, Wavefunction, SolutionPair, EigenResult
from .numerov import numerov_integrate, numerov_derivative, count_nodes
from .eigen import shoot_mismatch, find_eigenvalues, match_index
from .pair import solution_pair
from .tables import load_tabulated_potential
