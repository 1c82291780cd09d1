"""Fedder's criterion and the complement of R inside F_*R."""
from mcmforge.corpus import double_point, node
from mcmforge.errors import NotSplit
from mcmforge.groebner import fedder_test
from mcmforge.mcm import splitting_complement_mcm

for R in (node(), double_point()):
    print(f"{R.name}: F-split {fedder_test(R.ideal)}")
    try:
        c = splitting_complement_mcm(R)
        print(f"  complement: generators {list(c.module.twists)}, depth {c.depth}, dim {c.dim}")
    except NotSplit as ex:
        print("  not split:", ex)
