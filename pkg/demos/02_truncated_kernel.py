# The truncated dense polynomial kernel
#
# Every computation reduces to multiplying linear forms and reading one
# coefficient. Since the target monomial has every exponent <= n, anything
# with a larger exponent can be dropped as soon as it appears.

import time

from fanoscheme import LinearForm, TruncPoly, coefficient, tp_mul, tp_mul_linear, tp_one, tp_pow

x0_plus_x1 = TruncPoly.from_terms(2, 3, {(1, 0): 1, (0, 1): 1})
print("(x0 + x1)^3 =", tp_pow(x0_plus_x1, 3).terms())

# Terms past the cap vanish
print("x0^3 * x0 at cap 3:", tp_mul_linear(TruncPoly.from_terms(2, 3, {(3, 0): 1}), LinearForm((1, 0))).terms())

# The cubic-surface integrand: roots of Sym^3 times both differences
forms = [LinearForm(a) for a in [(3, 0), (2, 1), (1, 2), (0, 3), (1, -1), (-1, 1)]]
p = tp_one(2, 3)
for f in forms:
    p = tp_mul_linear(p, f)
print("coefficient of x0^3 x1^3:", coefficient(p, (3, 3)))

# Dense storage means the cost is set by (cap + 1)^num_vars, not by sparsity
for cap in (10, 20, 40):
    t0 = time.perf_counter()
    q = tp_one(3, cap)
    for _ in range(3 * cap):
        q = tp_mul_linear(q, LinearForm((1, 2, 3)))
    dt = time.perf_counter() - t0
    print(f"cap={cap}: {3 * cap} linear factors in {dt * 1000:.1f} ms, "
          f"top coefficient has {len(str(coefficient(q, (cap, cap, cap))))} digits")

# General products are supported too, at quadratic cost
print("commutes:", tp_mul(p, x0_plus_x1) == tp_mul(x0_plus_x1, p))
