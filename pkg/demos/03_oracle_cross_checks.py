# Cross-checking the degree two independent ways
#
# degree_theorem2 reads x_0^n...x_k^n against the product over ordered pairs
# of (x_i - x_j) and divides by (k+1)!. degree_dm reads the staircase
# x_0^n x_1^(n-1)...x_k^(n-k) against the Vandermonde, with no division.
# naive_coefficient expands everything with dictionaries and no truncation.

import math

from fanoscheme import FanoProblem, degree_dm, degree_theorem2, naive_coefficient
from fanoscheme.invariants import integrand_factors
from fanoscheme.oracle import staircase

for args in [(3, (3,), 1), (4, (2, 2), 1), (4, (4,), 1), (5, (2,), 2)]:
    p = FanoProblem(*args)
    v = p.num_vars
    c = naive_coefficient(integrand_factors(p), None, (p.n,) * v)
    s = naive_coefficient(integrand_factors(p, ordered_pairs=False), None, staircase(p))
    print(f"{p}: theorem2={degree_theorem2(p)} dm={degree_dm(p)} "
          f"naive={c // math.factorial(v)} (c={c}) naive_dm={s}")

# A larger instance where only the two dense routes are practical
p = FanoProblem(23, (5, 5, 5), 2)
print(p, degree_theorem2(p) == degree_dm(p), degree_dm(p))
