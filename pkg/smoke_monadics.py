import time

from laxdesc.fincat import (Adjunction, FinCategory, Functor, NatTrans,
                            arrow_category, check_adjunction,
                            check_equivalence, compose_functors,
                            discrete_category, find_left_adjoint,
                            functor_equal, identity_functor,
                            terminal_category)
from laxdesc.finset import (FinSetCat, FinSetMap, fs_range, identity_map,
                            basic_indexed_category, sigma_adjunction)
from laxdesc.pseudo import diagram_indexed_category
from laxdesc.monadics import (Monad, check_monad, monad_from_adjunction,
                              em_category, comparison_functor, is_monadic,
                              beck_chevalley, benabou_roubaud_compare,
                              pullback_monad)

t0 = time.time()


def stamp(msg):
    print(f"[{time.time() - t0:6.1f}s] {msg}", flush=True)


# 1. identity adjunction -> identity monad
C = FinSetCat(3)
idf = identity_functor(C)
ida = Adjunction(left=idf, right=idf,
                 unit=NatTrans(idf, idf, lambda x: C.identity(x)),
                 counit=NatTrans(idf, idf, lambda x: C.identity(x)))
M = monad_from_adjunction(ida)
assert M.T.ob(fs_range(2)) == fs_range(2)
assert check_monad(M) == []
stamp("1. identity monad ok")

# 2. sigma/pullback monad for p: [2] -> [1] doubles carriers
p = FinSetMap(fs_range(2), fs_range(1), (0, 0))
adj_p = sigma_adjunction(p, 3)
Mp = monad_from_adjunction(adj_p)
for s in adj_p.left.src.objects():
    assert len(Mp.T.ob(s).total) == 2 * len(s.total)
stamp(f"2. pullback monad laws ok over {len(list(adj_p.left.src.objects()))} objects")

# 3. M2 x - monad: algebras on [2] are exactly the 3 idempotent actions
FS = FinSetCat(2)


def m2_ob(x):
    return fs_range(2 * len(x))


def m2_mor(f):
    n, m = len(f.dom), len(f.cod)
    posy = {e: j for j, e in enumerate(f.cod)}
    img = [0] * (2 * n)
    for i in (0, 1):
        for k in range(n):
            img[i * n + k] = i * m + posy[f.img[k]]
    return FinSetMap(m2_ob(f.dom), m2_ob(f.cod), tuple(img))


T2 = Functor(FS, FS, m2_ob, m2_mor)


def eta_at(x):
    return FinSetMap(x, m2_ob(x), tuple(range(len(x))))


def mu_at(x):
    n = len(x)
    img = [0] * (4 * n)
    for j in (0, 1):
        for i in (0, 1):
            for v in range(n):
                img[j * 2 * n + i * n + v] = (j | i) * n + v
    return FinSetMap(fs_range(4 * n), fs_range(2 * n), tuple(img))


M2 = Monad(FS, T2, NatTrans(identity_functor(FS), T2, eta_at),
           NatTrans(compose_functors(T2, T2), T2, mu_at))
assert check_monad(M2) == []
em2 = em_category(M2, 2)
algs = em2.objects()
on_two = [a for a in algs if len(a.carrier) == 2]
stamp(f"3. M2 algebras: total {len(algs)}, on [2]: {len(on_two)} (want 3)")
assert len(on_two) == 3
rep = check_adjunction(em2.adjunction())
assert rep == [], rep
stamp("3b. EM adjunction triangles ok")

# 4. round trip: monad of the EM adjunction equals the original monad
M2back = monad_from_adjunction(em2.adjunction())
assert functor_equal(M2back.T, M2.T)
stamp("4. EM round trip recovers T strictly")

# 5. comparison of the EM adjunction is the identity-like equivalence
em2b = em_category(M2back, 2)
K = comparison_functor(em2.forgetful(), em2.adjunction(), em2b)
assert all(K.ob(a) == a for a in em2.objects())
stamp("5. comparison of EM adjunction is the identity on algebras")

# 6. EM forgetful of M2 x - is monadic (both oracles)
repm = is_monadic(em2.forgetful(), em2.adjunction(), 2)
stamp(f"6. EM forgetful monadic: {repm['monadic']} agree={repm['agree']} "
      f"creation_witness={repm['creation_witness']}")
assert repm["monadic"] is True

# 7. p* for surjective p: [2] -> [1] is monadic at bound 3 (bound 2 is too
# small for the reflection probe: no slice object with a fiber pair (2, 1)
# exists there, so a non-iso cofork passes the downstairs coequalizer test)
adj_s = sigma_adjunction(p, 3)
repp = is_monadic(adj_s.right, adj_s, 3)
stamp(f"7. p* monadic: {repp['monadic']} agree={repp['agree']} "
      f"comparison={repp['comparison']} witness={repp['creation_witness']}")
assert repp["monadic"] is True

# 8. collapse functor arrow -> terminal is not monadic
arr = arrow_category()
term = terminal_category()
collapse = Functor(arr, term, lambda x: 0, lambda m: 0)
adj_c = find_left_adjoint(collapse)
assert adj_c is not None
repc = is_monadic(collapse, adj_c, None)
stamp(f"8. collapse monadic: {repc['monadic']} agree={repc['agree']} "
      f"comparison={repc['comparison']}")
assert repc["monadic"] is False

# 9. Beck-Chevalley holds in the slice world for p: [2] -> [1]
Fb = basic_indexed_category(3)
bc1 = beck_chevalley(Fb, p, 3)
stamp(f"9. BC basic [2]->[1]: {bc1}")
assert bc1["holds"] is True

# 10. Beck-Chevalley in the diagram world for the fold of two points
Fd = diagram_indexed_category(2)
hbar = Functor(discrete_category(2), discrete_category(1),
               lambda x: 0, lambda m: 0)
bc2 = beck_chevalley(Fd, hbar, 2)
stamp(f"10. BC diagram fold 2->1: holds={bc2['holds']} checked={bc2['checked']}")

# 11. Beck-Chevalley fails in the diagram world for the ends-of-arrow functor
harrow = Functor(discrete_category(2), arrow_category(),
                 lambda x: x, lambda m: arrow_category().identity(m // 1 if False else m))
# morphisms of discrete_category(2) are identities; send identity i to identity of i
harrow = Functor(discrete_category(2), arrow_category(),
                 lambda x: x, lambda m: m)
bc3 = beck_chevalley(Fd, harrow, 2)
stamp(f"11. BC diagram ends-of-arrow: holds={bc3['holds']} witness={bc3['witness']}")
assert bc3["holds"] is False

# 12. Benabou-Roubaud comparison for basic p: [2] -> [1]
br = benabou_roubaud_compare(Fb, p, 3)
stamp(f"12. BR basic [2]->[1]: found={br['found']} bc={br['bc']['holds']} "
      f"equiv={br['equivalence']} commutes={br['underlying_commutes']} "
      f"iso={br['factorization_iso']} datum_failures={len(br['datum_failures'])}")
assert br["found"] is True

# 13. BR for p = id
idp = identity_map(fs_range(2))
brid = benabou_roubaud_compare(Fb, idp, 2)
stamp(f"13. BR id: found={brid['found']}")
assert brid["found"] is True

# 14. BR for the diagram fold (recorded either way)
brd = benabou_roubaud_compare(Fd, hbar, 2)
stamp(f"14. BR diagram fold: found={brd['found']} bc={brd['bc']['holds']} "
      f"equiv={brd['equivalence']} commutes={brd['underlying_commutes']} "
      f"iso={brd['factorization_iso']}")

stamp("all monadics smoke stages done")
