# Degree and genus of Fano schemes of lines and planes
#
# F_k(X) is the scheme of k-planes on a general complete intersection X in P^n.
# When its expected dimension is 0 the degree is a count; when it is 1 the
# scheme is a curve and we also get its genus.

import json

from fanoscheme import FanoProblem, compute_report, expected_dimension

# Lines on a cubic surface and on a quintic threefold
for n, degrees in [(3, (3,)), (4, (5,))]:
    rep = compute_report(FanoProblem(n, degrees, 1))
    print(f"lines on degree-{degrees[0]} hypersurface in P^{n}: {rep.degree}")

# Curves of lines: delta = 1
for n, degrees in [(4, (4,)), (5, (2, 3)), (6, (2, 2, 2))]:
    p = FanoProblem(n, degrees, 1)
    rep = compute_report(p)
    print(f"{p}: delta={rep.delta} degree={rep.degree} genus={rep.genus}")

# The genus is linear in the degree, with slope canonical_coefficient / 2
rep = compute_report(FanoProblem(4, (4,), 1))
print("g - 1 =", rep.genus - 1, "=", rep.canonical_coefficient, "*", rep.degree, "/ 2")

# Planes (k = 2): expected dimension drops fast as the degree grows
for d in range(2, 5):
    n = 3
    while expected_dimension(FanoProblem(n, (d,), 2)) < 0:
        n += 1
    rep = compute_report(FanoProblem(n, (d,), 2))
    print(f"planes on degree-{d} hypersurface in P^{n}: delta={rep.delta} degree={rep.degree}"
          f" hypothesis_ok={rep.hypothesis_ok}")

# Reports serialize to JSON with big integers as strings
print(json.dumps(compute_report(FanoProblem(12, (21,), 1)).to_dict()))
