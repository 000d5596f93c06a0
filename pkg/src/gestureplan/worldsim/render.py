"""Side-view rasterizer: world state -> 48x64 RGB frame in [0, 1].

Pixel geometry is chosen so the table spans the frame exactly
(64 px * 0.0075 m/px = 0.48 m), which makes horizontal world mirroring and
horizontal frame flips agree pixel for pixel.
"""
from __future__ import annotations

import numpy as np

from .core import BLOCK_DIAMETER, COLOR_RGB, WorldState

FRAME_H = 48
FRAME_W = 64
M_PER_PX = 0.0075
TABLE_ROWS = 2  # bottom rows drawn as the table surface

BACKGROUND_RGB = (0.94, 0.94, 0.92)
TABLE_RGB = (0.82, 0.71, 0.55)
EE_RGB = (0.45, 0.22, 0.05)

EE_FINGER_LEN = 0.015
EE_APERTURE_OPEN = 0.015
EE_APERTURE_CLOSED = 0.0075

# Column centers in meters; row centers in meters of height above the table.
_COL_X = (np.arange(FRAME_W) + 0.5) * M_PER_PX
_ROW_H = (FRAME_H - TABLE_ROWS - 0.5 - np.arange(FRAME_H)) * M_PER_PX
# Interval membership guard: strictly-inside tests keep rasterization
# symmetric under x -> extent - x even when a boundary is hit exactly.
_EPS = 1e-9


def world_to_pixel(x: float, z: float) -> tuple[int, int]:
    """Nearest (row, col) pixel for a world point, clipped to the frame."""
    col = int(np.clip(np.floor(x / M_PER_PX), 0, FRAME_W - 1))
    row = int(np.clip(np.round(FRAME_H - TABLE_ROWS - 0.5 - z / M_PER_PX), 0, FRAME_H - 1))
    return row, col


def pixel_to_world(row: int, col: int) -> tuple[float, float]:
    """World coordinates of a pixel center."""
    return float(_COL_X[col]), float(_ROW_H[row])


def _box_mask(cx: float, cz: float, half_w: float, half_h: float) -> np.ndarray:
    cols = np.abs(_COL_X - cx) < half_w - _EPS
    rows = np.abs(_ROW_H - cz) < half_h - _EPS
    return rows[:, None] & cols[None, :]


def render(state: WorldState) -> np.ndarray:
    """Deterministic 48x64x3 float32 frame of the current state."""
    img = np.empty((FRAME_H, FRAME_W, 3), dtype=np.float32)
    img[:] = BACKGROUND_RGB
    img[FRAME_H - TABLE_ROWS :, :] = TABLE_RGB

    half = BLOCK_DIAMETER / 2
    order = np.argsort([b.z for b in state.blocks], kind="stable")
    for i in order:
        spec = state.scene.blocks[i]
        b = state.blocks[i]
        mask = _box_mask(b.x, b.z + half, half, half)
        if spec.shape == "cylinder":
            # Knock out the raster corners so the side profile reads rounded.
            rows = np.flatnonzero(mask.any(axis=1))
            cols = np.flatnonzero(mask.any(axis=0))
            if len(rows) >= 2 and len(cols) >= 2:
                for r in (rows[0], rows[-1]):
                    mask[r, cols[0]] = False
                    mask[r, cols[-1]] = False
        img[mask] = COLOR_RGB[spec.color]

    ee = state.ee
    aperture = EE_APERTURE_CLOSED if ee.closed else EE_APERTURE_OPEN
    for fx in (ee.x - aperture, ee.x + aperture):
        img[_box_mask(fx, ee.z + EE_FINGER_LEN / 2, M_PER_PX / 2, EE_FINGER_LEN / 2)] = EE_RGB
    img[
        _box_mask(
            ee.x,
            ee.z + EE_FINGER_LEN + M_PER_PX / 2,
            aperture + M_PER_PX,
            M_PER_PX / 2,
        )
    ] = EE_RGB
    return img
