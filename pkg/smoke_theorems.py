import time

from laxdesc.descent import eq_groupoid, internal_actions
from laxdesc.fincat import (
    Functor, arrow_category, discrete_category, terminal_category,
    identity_functor,
)
from laxdesc.finset import FinSetMap, basic_indexed_category, fs_range
from laxdesc.laxdescent import (
    DescentMorphism, DescentObject, LaxDescentCategory,
)
from laxdesc.pseudo import (
    FINSET_WORLD, constant_precategory, sigma_precategory,
    strict_trunc_cosimp, diagram_indexed_category,
)
from laxdesc.theorems import (
    main_theorem_suite, monadicity_suite, suite_worlds,
    verify_absolute_creation, verify_main_theorem_left,
    verify_main_theorem_right, verify_monadicity_theorem,
    monadicity_instances, _random_functor,
)

T0 = time.time()


def stamp(msg):
    print(f"[{time.time() - T0:7.1f}s] {msg}", flush=True)


worlds = suite_worlds()

# 1. constant world, identity shape, right side
stamp("stage 1: constant world, right, pt-id")
A_c, ld_c = worlds["const1"]()
one = terminal_category()
H_id = Functor(one, one, {0: 0}, {0: 0})
y0 = next(iter(ld_c.objects()))
J = Functor(one, ld_c, {0: y0}, {0: ld_c.identity(y0)})
rep = verify_main_theorem_right(A_c, J, H_id)
print("  vacuous:", rep.vacuous)
print("  conclusions:", rep.conclusions)
assert not rep.vacuous
assert rep.conclusions["created"], rep.conclusions

# 2. same instance, left side
stamp("stage 2: constant world, left, pt-id")
rep = verify_main_theorem_left(A_c, J, H_id)
print("  vacuous:", rep.vacuous, " conclusions:", rep.conclusions)
assert not rep.vacuous and rep.conclusions["created"], rep.conclusions

# 3. kernel-pair fold world, right, arrow -> pt (a genuine product upstairs)
stamp("stage 3: fold world, right, arrow-pt")
A_f, ld_f = worlds["fold"]()
two = arrow_category()
bang = Functor(two, one, {0: 0, 1: 0}, {0: 0, 1: 0, 2: 0})
objs_f = list(ld_f.objects())
print("  fold world size:", len(objs_f))
import random as _r
rng = _r.Random(7)
J3 = _random_functor(rng, two, ld_f)
rep = verify_main_theorem_right(A_f, J3, bang)
print("  vacuous:", rep.vacuous, " conclusions:", rep.conclusions)
assert not rep.vacuous and rep.conclusions["created"], rep.conclusions

# 4. fold world, left side (coequalizer-flavoured extension)
stamp("stage 4: fold world, left, arrow-pt")
rep = verify_main_theorem_left(A_f, J3, bang)
print("  vacuous:", rep.vacuous, " conclusions:", rep.conclusions)
assert not rep.vacuous and rep.conclusions["created"], rep.conclusions

# 5. monoid world instance
stamp("stage 5: m2 world, right, pt-dst shape")
A_m, ld_m = worlds["m2"]()
print("  m2 world size:", len(list(ld_m.objects())))
dst1 = Functor(one, two, {0: 1}, {0: two.identity(1)})
J5 = _random_functor(rng, one, ld_m)
rep = verify_main_theorem_right(A_m, J5, dst1)
print("  vacuous:", rep.vacuous, " conclusions:", rep.conclusions)
assert not rep.vacuous and rep.conclusions["created"], rep.conclusions

# 6. diagram world at bound 1
stamp("stage 6: diagram fold world, right, pt-id")
A_d, ld_d = worlds["diagfold"]()
print("  diagfold world size:", len(list(ld_d.objects())))
J6 = _random_functor(rng, one, ld_d)
rep = verify_main_theorem_right(A_d, J6, H_id)
print("  vacuous:", rep.vacuous, " conclusions:", rep.conclusions)
assert not rep.vacuous and rep.conclusions["created"], rep.conclusions

# 7. absolute creation on a split fork (id, t.q) for a split epi q
stamp("stage 7: absolute creation, split instance")
lvl1 = A_c.level(1)
ys = [o for o in ld_c.objects() if sum(o.w.profile() if hasattr(o.w, "profile") else [0]) >= 0]
# pick carriers by hom inspection: need q: y -> c split epi, y != c
pairs = []
for oy in ld_c.objects():
    for oc in ld_c.objects():
        if oy is oc:
            continue
        for q in lvl1.hom(oy.w, oc.w):
            for t in lvl1.hom(oc.w, oy.w):
                if lvl1.compose(q, t) == lvl1.identity(oc.w):
                    pairs.append((oy, oc, q, t))
print("  split epi candidates:", len(pairs))
oy, oc, q, t = pairs[0]
f = DescentMorphism(oy, oy, lvl1.identity(oy.w))
g = DescentMorphism(oy, oy, lvl1.compose(t, q))
repA = verify_absolute_creation(A_c, {"lax": ld_c, "f": f, "g": g, "q": q})
print("  report:", {k: repA[k] for k in
                    ("hypotheses_met", "lift_count", "coequalizer", "created")})
assert repA["hypotheses_met"] and repA["lift_count"] == 1 and repA["created"]

# 8. absolute creation rejects a non-split fork
stamp("stage 8: absolute creation, non-split negative")
fid = DescentMorphism(oy, oy, lvl1.identity(oy.w))
repB = verify_absolute_creation(A_c, {"lax": ld_c, "f": fid, "g": fid, "q": q})
print("  hypotheses_met:", repB["hypotheses_met"])
assert not repB["hypotheses_met"]

# 9. monadicity theorem and suite
stamp("stage 9: monadicity suite, 6 instances")
ms = monadicity_suite(0, 6)
print("  summary:", ms)
assert ms["instances"] == 6 and ms["verified"] == 6, ms

# 10. right suite timing probe
stamp("stage 10: right suite, 12 instances")
t = time.time()
s10 = main_theorem_suite(0, 12, side="right")
dt = time.time() - t
print("  summary:", {k: s10[k] for k in
                     ("instances", "vacuous", "verified", "counterexamples")})
print("  by_world:", s10["by_world"])
print(f"  {dt:.1f}s for 12 -> est {dt / 12 * 500:.0f}s for 500")
assert s10["verified"] == 12 and not s10["counterexamples"], s10

# 11. left suite timing probe
stamp("stage 11: left suite, 12 instances")
t = time.time()
s11 = main_theorem_suite(1, 12, side="left")
dt = time.time() - t
print("  summary:", {k: s11[k] for k in
                     ("instances", "vacuous", "verified", "counterexamples")})
print(f"  {dt:.1f}s for 12 -> est {dt / 12 * 500:.0f}s for 500")
assert s11["verified"] == 12 and not s11["counterexamples"], s11

# 12. a genuinely vacuous instance: strict constant at disc(2), product missing
stamp("stage 12: vacuous instance handled")
disc2 = discrete_category(2)
idf = identity_functor(disc2)
A_v = strict_trunc_cosimp({1: disc2, 2: disc2, 3: disc2},
                          {n: idf for n in ("d0", "d1", "s0", "D0", "D1", "D2")})
objs_v = [DescentObject(i, disc2.identity(i)) for i in disc2.objects()]
ld_v = LaxDescentCategory(A_v, objs_v)
J12 = Functor(disc2, ld_v, {0: objs_v[0], 1: objs_v[1]},
              {disc2.identity(0): ld_v.identity(objs_v[0]),
               disc2.identity(1): ld_v.identity(objs_v[1])})
bang2 = Functor(disc2, one, {0: 0, 1: 0},
                {disc2.identity(0): 0, disc2.identity(1): 0})
rep = verify_main_theorem_right(A_v, J12, bang2)
print("  vacuous:", rep.vacuous, " hypotheses:", rep.hypotheses)
assert rep.vacuous and rep.construction is None and rep.conclusions is None

stamp("all smoke stages passed")
