"""Deterministic SVG drawings of fronts, handleslide marks and disks."""

from __future__ import annotations

from xml.sax.saxutils import escape

from .disks import DiskBoundary
from .front import EventKind, FrontDiagram
from .mcs import MCS

__all__ = ["render_svg"]

STEP = 60.0  # horizontal distance between slot centres
GAP = 30.0  # vertical distance between strand levels
MARGIN = 30.0


def _x(slot: float) -> float:
    return MARGIN + slot * STEP


def _y(level: float) -> float:
    return MARGIN + (level - 1) * GAP


def _fmt(v: float) -> str:
    return f"{v:.1f}"


def _line(x1, y1, x2, y2) -> str:
    return f"M{_fmt(x1)},{_fmt(y1)} L{_fmt(x2)},{_fmt(y2)}"


def _strand_paths(diagram: FrontDiagram) -> list[str]:
    paths = []
    for index, event in enumerate(diagram.events):
        s, k = index, event.position
        x0, x1, xm = _x(s), _x(s + 1), _x(s + 0.5)
        left_n = diagram.strand_counts[s]
        if event.kind is EventKind.LEFT_CUSP:
            ym = (_y(k) + _y(k + 1)) / 2
            paths.append(f"M{_fmt(xm)},{_fmt(ym)} C{_fmt(x1 - 10)},{_fmt(ym)} "
                         f"{_fmt(x1 - 20)},{_fmt(_y(k))} {_fmt(x1)},{_fmt(_y(k))}")
            paths.append(f"M{_fmt(xm)},{_fmt(ym)} C{_fmt(x1 - 10)},{_fmt(ym)} "
                         f"{_fmt(x1 - 20)},{_fmt(_y(k + 1))} {_fmt(x1)},{_fmt(_y(k + 1))}")
            for i in range(1, left_n + 1):
                j = i if i < k else i + 2
                paths.append(_line(x0, _y(i), x1, _y(j)))
        elif event.kind is EventKind.RIGHT_CUSP:
            ym = (_y(k) + _y(k + 1)) / 2
            paths.append(f"M{_fmt(x0)},{_fmt(_y(k))} C{_fmt(x0 + 20)},{_fmt(_y(k))} "
                         f"{_fmt(x0 + 10)},{_fmt(ym)} {_fmt(xm)},{_fmt(ym)}")
            paths.append(f"M{_fmt(x0)},{_fmt(_y(k + 1))} C{_fmt(x0 + 20)},{_fmt(_y(k + 1))} "
                         f"{_fmt(x0 + 10)},{_fmt(ym)} {_fmt(xm)},{_fmt(ym)}")
            for i in range(1, left_n + 1):
                if i in (k, k + 1):
                    continue
                j = i if i < k else i - 2
                paths.append(_line(x0, _y(i), x1, _y(j)))
        else:
            for i in range(1, left_n + 1):
                j = k + 1 if i == k else k if i == k + 1 else i
                paths.append(_line(x0, _y(i), x1, _y(j)))
    return paths


def render_svg(
    diagram: FrontDiagram,
    mcs: MCS | None = None,
    disks: list[DiskBoundary] | None = None,
    labels: bool = True,
) -> str:
    width = _x(diagram.n_slots - 1) + MARGIN
    height = _y(max(diagram.strand_counts)) + MARGIN
    out = [
        '<svg xmlns="http://www.w3.org/2000/svg" '
        f'width="{_fmt(width)}" height="{_fmt(height)}" '
        f'viewBox="0 0 {_fmt(width)} {_fmt(height)}">',
        f"<title>{escape(diagram.word)}</title>",
    ]
    for disk in disks or []:
        for offset, sheets in enumerate(disk.slices):
            s = disk.first_slot + offset
            for _, top, bot in sheets:
                out.append(
                    f'<rect x="{_fmt(_x(s - 0.5))}" y="{_fmt(_y(top))}" '
                    f'width="{_fmt(STEP)}" height="{_fmt(_y(bot) - _y(top))}" '
                    'fill="#4a90d9" fill-opacity="0.25" stroke="none"/>'
                )
    out.append('<g fill="none" stroke="black" stroke-width="1.5">')
    for d in _strand_paths(diagram):
        out.append(f'<path d="{d}"/>')
    out.append("</g>")
    if labels:
        out.append('<g font-family="monospace" font-size="10" fill="#555">')
        for g in diagram.generators:
            event = diagram.events[g.event_index]
            x = _x(g.event_index + 0.5)
            y = (_y(event.position) + _y(event.position + 1)) / 2
            out.append(
                f'<text x="{_fmt(x + 4)}" y="{_fmt(y - 4)}">{escape(g.label)}</text>'
            )
        out.append("</g>")
    if mcs is not None:
        out.append('<g stroke="#c0392b" stroke-width="2" fill="#c0392b">')
        for s, marks in enumerate(mcs.handleslides):
            for r, (k, l) in enumerate(marks):
                x = _x(s) - STEP / 3 + (r + 1) * (2 * STEP / 3) / (len(marks) + 1)
                out.append(f'<path d="{_line(x, _y(k), x, _y(l))}"/>')
                out.append(f'<circle cx="{_fmt(x)}" cy="{_fmt(_y(k))}" r="2.5"/>')
                out.append(f'<circle cx="{_fmt(x)}" cy="{_fmt(_y(l))}" r="2.5"/>')
        out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
