# Seed for every randomized choice (flags, projections, witnesses)
SEED = 0xC0FFEE

# Number of coefficients kept in truncated power series, t^0..t^N
SERIES_TRUNCATION = 16

# Upper bound on the quotient iterations done by a saturation
MAX_SATURATION_ITERATIONS = 32

# Inclusion-exclusion over lead monomials is exponential in this number
MAX_HILBERT_GENERATORS = 20

# Retries for seeded choices that turn out to be non-generic
MAX_GENERICITY_ATTEMPTS = 16

# Random numerators are drawn uniformly from [-bound, bound]
RANDOM_NUMERATOR_BOUND = 99

SCHUBERT_SAMPLES = 200
SCHUBERT_SPACES = [[2, 4], [2, 5]]

FLAG_INDEPENDENCE_SEEDS = 5

OUTPUT_FORMAT = "json"
