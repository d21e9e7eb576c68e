"""Published reference values for the distance distribution table.

ROW_ORDER fixes the presentation order.  Each row maps (n, k) to the
pair counts at distances 1 through 4.  These literals are transcribed
from the published table and are cross-checked in reports against both
the closed forms and the BFS oracle.
"""

from __future__ import annotations

ROW_ORDER: tuple[tuple[int, int], ...] = (
    (4, 2),
    (4, 3),
    (5, 2),
    (5, 3),
    (5, 4),
    (6, 2),
)

REFERENCE_DISTANCE_TABLE: dict[tuple[int, int], dict[int, int]] = {
    (4, 2): {1: 114, 2: 485, 3: 90, 4: 91},
    (4, 3): {1: 80, 2: 486, 3: 64, 4: 150},
    (5, 2): {1: 550, 2: 5275, 3: 560, 4: 875},
    (5, 3): {1: 440, 2: 4125, 3: 670, 4: 2025},
    (5, 4): {1: 275, 2: 4715, 3: 305, 4: 1965},
    (6, 2): {1: 2445, 2: 54050, 3: 2790, 4: 6781},
}
