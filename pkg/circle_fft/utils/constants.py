# tolerances (double precision)
UNIT_MODULUS_TOL = 1e-12
ORACLE_TOL = 1e-9
VARIANT_TOL = 1e-12
ROUND_TRIP_TOL = 1e-9

# benchmark defaults
DEFAULT_BENCH_SIZES = [2**p for p in range(8, 14)]
DEFAULT_REPEATS = 5
DEFAULT_WARMUP = 1
MIN_REPEATS = 5
MIN_FIT_SIZES = 4

# naive oracle works on row blocks of roughly this many matrix entries; small
# enough that a block stays in cache at every size
NAIVE_BLOCK_ENTRIES = 1 << 16

# iterative FFT timings run a batch of signals holding this many samples in total
BENCH_BATCH_ELEMENTS = 1 << 14

# render defaults, in pixels
DEFAULT_CIRCLE_RADIUS = 100.0
DEFAULT_PANEL_GAP = 100.0
DEFAULT_FONT_SIZE = 14.0
DEFAULT_DOT_RADIUS = 3.0

# environment
SEED_ENV_VAR = "CIRCLEFFT_SEED"
DEFAULT_SEED = 0

# CLI exit codes
EXIT_OK = 0
EXIT_USAGE = 1
EXIT_IO = 2
EXIT_VERIFY = 3

BENCH_CSV_HEADER = ["algorithm", "N", "repeats", "median_seconds", "mults", "adds"]
