import sys
sys.path.insert(0, "src")

from skeinkit.corpus import (
    empty_link, unknot, unlink, hopf_plus, hopf_minus, trefoil, figure_eight,
)
from skeinkit.eigen import delta_homfly, delta_kauffman
from skeinkit.ring import RingElem, vpow, spow, z_poly
from skeinkit.skein_eval import (
    EvalConfig, SkeinBudgetError, adjoint_homfly, homfly, kauffman,
    skein_relation_probe, clear_caches,
)

dH = delta_homfly()
dK = delta_kauffman()
z = RingElem(z_poly())
v1 = RingElem(vpow(1))
vm1 = RingElem(vpow(-1))
one = RingElem.one()

checks = []

def chk(name, got, want):
    ok = got == want
    checks.append((name, ok))
    print(("PASS" if ok else "FAIL"), name)
    if not ok:
        print("   got :", got)
        print("   want:", want)

chk("homfly empty", homfly(empty_link()), one)
chk("homfly unknot", homfly(unknot()), dH)
chk("homfly unlink3", homfly(unlink(3)), dH ** 3)
chk("homfly hopf+", homfly(hopf_plus()), dH * dH + z * vm1 * dH)
chk("homfly hopf-", homfly(hopf_minus()), dH * dH - z * v1 * dH)
chk("homfly trefoil", homfly(trefoil()),
    dH * (vm1 + vm1 - v1 + vm1 * z * z))
chk("homfly fig8", homfly(figure_eight()),
    dH * (vm1 * vm1 + v1 * v1 - one - z * z))

chk("kauffman empty", kauffman(empty_link()), one)
chk("kauffman unknot", kauffman(unknot()), dK)
chk("kauffman hopf+", kauffman(hopf_plus()), dK * dK + z * dK * (vm1 - v1))
# framed values of mirror diagrams agree here: the hopf value is fixed by
# v -> v^-1, s -> s^-1 (which sends z to -z and keeps both deltas)
chk("kauffman hopf-", kauffman(hopf_minus()), dK * dK + z * dK * (vm1 - v1))
# one crossing of the 3-crossing diagram resolved by hand: switch gives a
# single positive kink, one smoothing gives the 4-crossing hopf diagram,
# the other caps the remaining clasp into two negative kinks (writhe -2)
tre_plus = dK * dK + z * dK * (vm1 - v1)
tre_minus = v1 * v1 * dK
chk("kauffman trefoil", kauffman(trefoil()), vm1 * dK + z * (tre_plus - tre_minus))

# curls: positive kink scales by v^-1, negative by v
chk("homfly curl+", homfly(unknot().with_curl(0, 1)), vm1 * dH)
chk("homfly curl-", homfly(unknot().with_curl(0, -1)), v1 * dH)
chk("kauffman curl+", kauffman(unknot().with_curl(0, 1)), vm1 * dK)
chk("kauffman curl-", kauffman(unknot().with_curl(0, -1)), v1 * dK)

# multiplicativity over split unions
u = hopf_plus().disjoint_union(trefoil())
chk("homfly split mult", homfly(u), homfly(hopf_plus()) * homfly(trefoil()))
chk("kauffman split mult", kauffman(u), kauffman(hopf_plus()) * kauffman(trefoil()))

# kauffman ignores orientation
chk("kauffman reversal", kauffman(hopf_plus().reverse_component(0)), kauffman(hopf_plus()))

# independent anchors: a meridian multiplies the invariant by its eigenvalue
from skeinkit.eigen import (
    homfly_meridian_eigenvalue, kauffman_meridian_eigenvalue,
)
from skeinkit.partition import Partition

one_box = Partition((1,))
phi = Partition(())
c1 = kauffman_meridian_eigenvalue(one_box)
s1_fwd = homfly_meridian_eigenvalue(one_box, phi)
s1_rev = homfly_meridian_eigenvalue(phi, one_box)
chk("kauffman meridian r=1", kauffman(unknot().with_meridians(0, 1)), dK * c1)
chk("kauffman meridian r=2", kauffman(unknot().with_meridians(0, 2)), dK * c1 * c1)
chk("homfly meridian r=1", homfly(unknot().with_meridians(0, 1)), dH * s1_fwd)
chk("homfly meridian r=2", homfly(unknot().with_meridians(0, 2)), dH * s1_fwd * s1_fwd)
chk("homfly reversed meridian", homfly(hopf_plus().reverse_component(0)), dH * s1_rev)

# mirror: v -> v^-1, z -> -z; check via the mirrored trefoil
mir = homfly(trefoil().mirror())
want_mir = dH * (v1 + v1 - vm1 + v1 * z * z)
chk("homfly mirror trefoil", mir, want_mir)

# relation probes
for ci in range(3):
    rep = skein_relation_probe(trefoil(), ci, "oriented")
    chk(f"oriented relation trefoil c{ci}", rep["holds"], True)
    rep = skein_relation_probe(trefoil(), ci, "unoriented")
    chk(f"unoriented relation trefoil c{ci}", rep["holds"], True)
rep = skein_relation_probe(figure_eight(), 2, "oriented")
chk("oriented relation fig8 c2", rep["holds"], True)

# adjoint
chk("adjoint unknot", adjoint_homfly(unknot()), dH * dH - one)

# memo off equality
cfg = EvalConfig(max_crossings=24, memo=False)
clear_caches()
chk("memo-off homfly trefoil", homfly(trefoil(), cfg), dH * (vm1 + vm1 - v1 + vm1 * z * z))
chk("memo-off kauffman fig8", kauffman(figure_eight(), cfg), kauffman(figure_eight()))

# budget
try:
    homfly(trefoil(), EvalConfig(max_crossings=2))
    chk("budget raises", False, True)
except SkeinBudgetError as e:
    chk("budget raises", True, True)
    print("   msg:", e)

bad = sum(1 for _, ok in checks if not ok)
print(f"\n{len(checks) - bad}/{len(checks)} passed")
sys.exit(1 if bad else 0)
