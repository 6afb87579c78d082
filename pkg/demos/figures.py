"""
Drawing the objects
===================

Writes SVG files for a labelled polygon with its snake, a dissection, a
Shi tableau and a partition inside its staircase.  Pass an output directory
as the first argument (default: the current directory).
"""

import sys
from pathlib import Path

from fusscat import StaircasePartition, alternating_labeling, phi_inverse, psi_inverse
from fusscat.render import partition_svg, polygon_svg, tableau_svg

out = Path(sys.argv[1] if len(sys.argv) > 1 else ".")
out.mkdir(parents=True, exist_ok=True)

poly = alternating_labeling(4, 3)
p = StaircasePartition(4, 3, (12, 5, 3, 0))

files = {
    "polygon_4_3.svg": polygon_svg(poly),
    "dissection_4_3.svg": polygon_svg(poly, psi_inverse(p)),
    "tableau_4_3.svg": tableau_svg(phi_inverse(p)),
    "partition_4_3.svg": partition_svg(p),
}
for name, svg in files.items():
    (out / name).write_text(svg)
    print("wrote", out / name)
