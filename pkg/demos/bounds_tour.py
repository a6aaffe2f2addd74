"""Bounds on the localization number across the design families.

For each design the report lists every lower bound that applies and every
constructive upper bound, with each strategy checked against all robbers.
"""
from locgame.generators import affine_plane, derive_td_from_pp, projective_plane, sqs_boolean, sts, transversal_design
from locgame.strategies import bounds_report

designs = [
    projective_plane(2),
    projective_plane(3),
    affine_plane(3).design,
    affine_plane(4).design,
    sts(13),
    sts(15),
    sts(27),
    sqs_boolean(3),
    derive_td_from_pp(projective_plane(3), 0).design,
    transversal_design(4, 5).design,
]

for d in designs:
    report = bounds_report(d)
    print("\n".join(report.text_lines()[1:]))
    print()

# STS(13): the half-points strategy beats the two-design scan by a wide margin
rep = bounds_report(sts(13))
print("STS(13) upper bounds:", sorted(r.value for r in rep.rows if r.kind == "UPPER"))
