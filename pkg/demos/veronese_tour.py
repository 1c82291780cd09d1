"""Walk through the Frobenius pushforward of R3 and its Veronese summands."""
from mcmforge import certify_mcm, find_cm_veronese, frobenius_pushforward, veronese_submodule
from mcmforge.corpus import r3

R = r3()
print(f"{R.name}: dim {R.dimension}, depth {R.depth}, local cohomology lengths {R.lc_table.as_list()}")
print("Hilbert series:", R.hilbert_series().reduced())

F = frobenius_pushforward(R, 1)
print("F_*R generators in degrees", sorted(F.presentation.minimal().twists))

for i in range(R.p):
    V = veronese_submodule(R, 1, i)
    c = certify_mcm(V.presentation, R)
    print(f"  R^(2,{i}): pieces {V.class_dims(5)}, depth {c.depth}, rank {c.rank}")

c = find_cm_veronese(R.module, R)
print("first Cohen-Macaulay summand:", c.witness, "rank", c.rank)
