"""Static SVG snapshots of sensor deployments.

Each sensor is drawn as a filled circular sector (apex at the sensor,
radius R, half-angle of half the view angle, bisector along the deviation
angle). Path coordinates are field meters; a single group transform flips
the y axis to screen convention, as noted in the file header comment. No
timestamps or other varying fields are emitted, so output is byte-stable.
"""

import math

SECTOR_FILL = "#2f7ed8"
SECTOR_STROKE = "#1a4f8a"


def _fmt(value):
    return f"{value:.6f}"


def sector_path(sensor):
    """SVG path for one sensing sector, or None for a full-circle view."""
    if sensor.view_angle >= 2.0 * math.pi:
        return None
    half = sensor.view_angle / 2.0
    a1 = sensor.deviation - half
    a2 = sensor.deviation + half
    x1 = sensor.x + sensor.radius * math.cos(a1)
    y1 = sensor.y + sensor.radius * math.sin(a1)
    x2 = sensor.x + sensor.radius * math.cos(a2)
    y2 = sensor.y + sensor.radius * math.sin(a2)
    large_arc = 1 if sensor.view_angle > math.pi else 0
    return (
        f"M {_fmt(sensor.x)} {_fmt(sensor.y)} "
        f"L {_fmt(x1)} {_fmt(y1)} "
        f"A {_fmt(sensor.radius)} {_fmt(sensor.radius)} 0 {large_arc} 1 "
        f"{_fmt(x2)} {_fmt(y2)} Z"
    )


def render_deployment_svg(sensors, field, path=None):
    """Render the field boundary and sensor sectors; optionally write to path."""
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        "<!-- y axis flipped to screen convention by the group transform;"
        " path coordinates are field meters -->",
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_fmt(field.length)}" height="{_fmt(field.width)}" '
        f'viewBox="0 0 {_fmt(field.length)} {_fmt(field.width)}">',
        f'<g transform="translate(0,{_fmt(field.width)}) scale(1,-1)">',
        f'<rect x="0" y="0" width="{_fmt(field.length)}" height="{_fmt(field.width)}" '
        'fill="white" stroke="black" stroke-width="1"/>',
    ]
    for sensor in sensors:
        d = sector_path(sensor)
        if d is None:
            lines.append(
                f'<circle cx="{_fmt(sensor.x)}" cy="{_fmt(sensor.y)}" '
                f'r="{_fmt(sensor.radius)}" fill="{SECTOR_FILL}" fill-opacity="0.35" '
                f'stroke="{SECTOR_STROKE}" stroke-width="0.5"/>'
            )
        else:
            lines.append(
                f'<path d="{d}" fill="{SECTOR_FILL}" fill-opacity="0.35" '
                f'stroke="{SECTOR_STROKE}" stroke-width="0.5"/>'
            )
        lines.append(
            f'<circle cx="{_fmt(sensor.x)}" cy="{_fmt(sensor.y)}" r="1.500000" '
            f'fill="{SECTOR_STROKE}"/>'
        )
    lines.append("</g>")
    lines.append("</svg>")
    text = "\n".join(lines) + "\n"
    if path is not None:
        with open(path, "w") as fh:
            fh.write(text)
    return text
