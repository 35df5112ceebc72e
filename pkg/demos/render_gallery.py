"""Emit figures: DOT graphs and SVG grids with labels, weights, corners.

Outputs land in demos/output/.  DOT files render with graphviz
(`neato -Tpng`), SVG files open directly in a browser.  Wrap-around
edges leave the grid as margin stubs; diagonal highlighting gives each
of the gcd(n,m) diagonals its own color.
"""

from pathlib import Path

from torusmagic import RenderSpec, construct, render, search

out_dir = Path(__file__).parent / "output"
out_dir.mkdir(exist_ok=True)


def emit(name: str, text: str) -> None:
    path = out_dir / name
    path.write_text(text)
    print(f"wrote {path}")


lab33 = construct(3, 3)
emit("c3c3_labels.dot", render(lab33, RenderSpec(format="dot")))
emit("c3c3_weights.svg", render(lab33, RenderSpec(format="svg", annotate="weights")))
emit("c3c3_corners.svg", render(lab33, RenderSpec(format="svg", annotate="corners")))

lab46 = construct(4, 6)
emit("c4c6_diagonals.svg",
     render(lab46, RenderSpec(format="svg", highlight_diagonals=True)))
emit("c4c6_diagonals.dot",
     render(lab46, RenderSpec(format="dot", annotate="weights",
                              highlight_diagonals=True)))

found = search(3, 4)
if found.status == "found":
    emit("c3c4_searched.svg",
         render(found.labeling, RenderSpec(format="svg", annotate="weights")))
