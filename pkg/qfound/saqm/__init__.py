from .models import Predictor, DensityMatrix, MeasurementBasis, MubSet, ProbabilityTable, AmplitudeNetwork
from .born import (born_probabilities, exponent_deviation, exponent_scan, is_eigenstate_like, statistical_distance,
                   hilbert_angle, same_ray, reverse_amplitude, trace_probability, continuous_path)
from .amplitudes import compose_amplitudes, path_sum, amplitude_tolerance
from .tomography import mub_set, table_from_density, density_from_table
from .counting import (HardyCounts, CompositeCounts, hardy_counts, real_space_violation, composite_counts,
                       wootters_g_identity)
from .composite import no_signalling_check
from .serialization import table_to_json, table_from_json, density_to_json, density_from_json
from .sampling import (random_predictor, random_basis, random_density_matrix, random_amplitude,
                       random_series_parallel_network)
