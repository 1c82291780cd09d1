"""Build a rank-2 MCM module over the Stanley-Reisner ring of the real projective plane."""
from mcmforge import theorem_A_hypotheses, theorem_A_pipeline
from mcmforge.corpus import r4, rp2

R = rp2()
rep = theorem_A_hypotheses(R)
print(f"{R.name}: dim {rep.dim}, depth {rep.depth}, LC lengths {rep.lc_table.as_list()}")
print("failed checks:", rep.failures or "none", "| unchecked:", rep.unchecked)

c = theorem_A_pipeline(R)
P = c.module.minimal()
print(f"deformation element x = {c.witness['x']}")
print(f"syzygy module: {P.rank} generators, {len(P.relations)} relations, depth {c.depth}, rank {c.rank}")

print("\nR4 for contrast:", theorem_A_hypotheses(r4()).failures)
