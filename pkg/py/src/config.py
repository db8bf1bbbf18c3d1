# Configuration and constants.

# LAB_MEM_CAP_MIB # can be provided in the environment
# LAB_WORKERS # can be provided in the environment
# LAB_TASK_TIMEOUT # can be provided in the environment
# LAB_ENERGY_MAX_SIZE # can be provided in the environment

LAB_DESCRIPTION = "sumlab computes consecutive sums, additive energy and the bounds around them."

DEFAULT_SEED = 0
DEFAULT_FORMAT = "csv"
OUTPUT_FORMATS = ("csv", "json")

# Bit array budget for count_distinct_sums, in MiB. 512 MiB covers p_k <= 2^32.
DEFAULT_MEM_CAP_MIB = 512
POPCOUNT_CHUNK_BYTES = 1 << 24

# Largest |P| accepted by additive_energy (k <= 12000, ~1.1 GiB transient).
DEFAULT_ENERGY_MAX_SIZE = 12001

BRUTE_MAX_LENGTH = 2000
DECOMPOSITION_MAX_SIZE = 400
QUADRUPLE_LOOP_MAX_SIZE = 24
EXHAUSTIVE_MAX_N = 16
PMF_EXPECTATION_MAX_N = 40
MAXIMUM_SEARCH_MAX_N = 18

PMF_MAX_STEPS = 10**6
EXACT_PMF_MAX_STEPS = 2000
LEMMA_MAX_ENTRIES = 10**6

LATTICE_MAX_N = 10**5
GCD_DIRECT_MAX_N = 10**5
GCD_TOTIENT_MAX_N = 10**7
PILLAI_MAX_L = 10**6

BISECTION_TOLERANCE = 1e-12
BISECTION_MAX_STEPS = 200

MAX_WORKERS = 4
TASK_TIMEOUT = 3600.0  # in seconds
