"""
Inclusion tables for the families
=================================

Three views of the same landscape: the structural families on their own,
the contextual-grammar families they induce, and the merged picture with
the resource-bounded families RL_V(n), RL_P(n), REG_Z(n) woven in.
Edges carry a status: proper inclusion, equality, properness open, or
inclusion itself unknown.
"""

from collections import Counter

from icgram.hierarchy import SCOPES, hierarchy
from icgram.subregular import parse_family_label as fam

print("available scopes:", ", ".join(SCOPES))
print()

table = hierarchy("subregular")
print(table.to_text())

# The merged table adds cross edges between structural and resource
# families, e.g. every combinational selection fits in three states.
merged = hierarchy("merged")
by_status = Counter(e.status for e in merged.edges)
print("merged scope:", len(merged.nodes), "nodes,",
      len(merged.edges), "edges", dict(sorted(by_status.items())))
print()

# Reachability questions use proper and equal edges only; an unknown
# inclusion is never silently assumed.
print("MON <= REG_Z(1) and back (equality):",
      merged.reachable(fam("MON"), fam("REG_Z(1)"))
      and merged.reachable(fam("REG_Z(1)"), fam("MON")))
print("DEF <= RL_V(2):", merged.reachable(fam("DEF"), fam("RL_V(2)")))
print("SUF <= RL_V(2):", merged.reachable(fam("SUF"), fam("RL_V(2)")))
