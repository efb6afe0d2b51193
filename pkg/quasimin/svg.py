"""Plain-text SVG rendering of the Newton polygon face model."""
from logging import getLogger
from typing import Any, Dict, List, Sequence

_LOGGER = getLogger(__name__)

_CELL = 40
_MARGIN = 30
_POINT_RADIUS = 4


def _xy(point: Sequence[int], height: int) -> str:
    x = _MARGIN + point[0] * _CELL
    y = _MARGIN + (height - point[1]) * _CELL
    return f"{x},{y}"


def render_svg(model: Dict[str, Any]) -> str:
    """Lattice, hull, southwestern edges and the omega corners of a face model."""
    points: List[List[int]] = model["points"]
    width = max(k[0] for k in points) + 1
    height = max(k[1] for k in points) + 1
    size_x = 2 * _MARGIN + width * _CELL
    size_y = 2 * _MARGIN + height * _CELL
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size_x}" height="{size_y}" '
        f'viewBox="0 0 {size_x} {size_y}">'
    ]
    for i in range(width + 1):
        for j in range(height + 1):
            x, y = _xy((i, j), height).split(",")
            parts.append(f'<circle cx="{x}" cy="{y}" r="1" fill="#bbb"/>')
    parts.append(
        f'<line x1="{_MARGIN}" y1="{_MARGIN + height * _CELL}" '
        f'x2="{_MARGIN + width * _CELL}" y2="{_MARGIN + height * _CELL}" '
        'stroke="#888"/>'
    )
    parts.append(
        f'<line x1="{_MARGIN}" y1="{_MARGIN}" '
        f'x2="{_MARGIN}" y2="{_MARGIN + height * _CELL}" stroke="#888"/>'
    )
    vertices = model["hull"]["vertices"]
    if len(vertices) > 1:
        outline = " ".join(_xy(v, height) for v in vertices)
        parts.append(
            f'<polygon class="hull" points="{outline}" fill="#e8f0ff" stroke="#36c"/>'
        )
    for face in model["faces"]:
        if face["normal"] is None:
            continue
        ends = sorted(face["points"])
        parts.append(
            f'<polyline class="southwest-edge" points="{_xy(ends[0], height)} '
            f'{_xy(ends[-1], height)}" stroke="#c33" stroke-width="3" fill="none"/>'
        )
    for point in points:
        x, y = _xy(point, height).split(",")
        parts.append(
            f'<circle class="support" cx="{x}" cy="{y}" r="{_POINT_RADIUS}" '
            'fill="#333"/>'
        )
    for point in model["omega"]:
        x, y = _xy(point, height).split(",")
        parts.append(
            f'<circle class="omega" cx="{x}" cy="{y}" r="{_POINT_RADIUS + 3}" '
            f'fill="none" stroke="#c33" stroke-width="2"/>'
        )
    parts.append("</svg>")
    _LOGGER.debug("Rendered %d support points", len(points))
    return "\n".join(parts) + "\n"
