# %% [markdown]
# # Ruling out LOCC conversions
#
# Schmidt number cannot increase under LOCC. A source whose decomposition
# only uses Schmidt rank 3 can never reach a target whose rank bound is 4.

# %%
from schmidtnum import analyze, locc_conversion_excluded
from schmidtnum.worked_examples import half_maximally_entangled, sliding_triples

# %%
for m in (5, 7):
    for n in (8, 10):
        src, tgt = analyze(sliding_triples(m)), analyze(half_maximally_entangled(n))
        verdict = "excluded" if locc_conversion_excluded(src, tgt) else "undecided"
        print(f"{m}x{m} triples (upper {src.upper_bound}) -> {n}x{n} mixture "
              f"(lower {tgt.lower_bound}): {verdict}")

# %%
# the reverse direction is not decided by this criterion
print(locc_conversion_excluded(analyze(half_maximally_entangled(8)), analyze(sliding_triples(5))))
