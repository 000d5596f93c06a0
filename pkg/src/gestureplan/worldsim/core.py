"""Deterministic 2.5-D side-view tabletop world.

The world is a vertical slice: blocks and a point end-effector move in the
(x, z) plane, x horizontal along the table, z height above the table surface.
Block poses use the *bottom* height convention (z = 0 means resting on the
table), so a block stacked on a table-resting block sits at z = diameter.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field, replace
from typing import Optional

import numpy as np

SHAPES = ("cube", "cylinder")
COLOR_NAMES = ("red", "blue", "green", "yellow", "magenta", "cyan", "grey", "black")
COLOR_RGB = {
    "red": (0.90, 0.10, 0.10),
    "blue": (0.10, 0.20, 0.90),
    "green": (0.10, 0.75, 0.15),
    "yellow": (0.95, 0.85, 0.10),
    "magenta": (0.85, 0.15, 0.80),
    "cyan": (0.10, 0.80, 0.85),
    "grey": (0.50, 0.50, 0.50),
    "black": (0.05, 0.05, 0.05),
}
RELATIONS = ("left_of", "right_of", "on_top_of")

BLOCK_DIAMETER = 0.05
TABLE_EXTENT = (0.0, 0.48)
N_BLOCKS = 4
# Minimum pairwise center separation at scene initialization.
MIN_SEPARATION = 1.5 * BLOCK_DIAMETER
# Block centers are sampled inside [SPAWN_MARGIN, extent - SPAWN_MARGIN].
SPAWN_MARGIN = 0.05


@dataclass(frozen=True)
class WorldConfig:
    max_step: float = 0.01
    grasp_radius: float = 0.6 * BLOCK_DIAMETER
    carry_height: float = 0.11
    z_max: float = 0.35


@dataclass(frozen=True)
class BlockSpec:
    shape: str
    color: str
    x: float
    diameter: float = BLOCK_DIAMETER

    def __post_init__(self):
        if self.shape not in SHAPES:
            raise ValueError(f"unknown shape {self.shape!r}")
        if self.color not in COLOR_NAMES:
            raise ValueError(f"unknown color {self.color!r}")


@dataclass(frozen=True)
class SceneSpec:
    blocks: tuple[BlockSpec, ...]
    table_extent: tuple[float, float] = TABLE_EXTENT
    seed: int = 0
    ood: bool = False

    def duplicates_of(self, i: int) -> list[int]:
        """Indices of blocks sharing block i's (shape, color), including i."""
        b = self.blocks[i]
        return [
            j
            for j, o in enumerate(self.blocks)
            if o.shape == b.shape and o.color == b.color
        ]


@dataclass(frozen=True)
class BlockState:
    x: float
    z: float  # bottom height above the table surface

    @property
    def top(self) -> float:
        return self.z + BLOCK_DIAMETER

    @property
    def center_z(self) -> float:
        return self.z + BLOCK_DIAMETER / 2


@dataclass(frozen=True)
class EEState:
    x: float
    z: float
    grip: float = -1.0
    holding: Optional[int] = None

    @property
    def closed(self) -> bool:
        return self.grip > 0.0


@dataclass(frozen=True)
class Action:
    dx: float
    dz: float
    grip: float

    @staticmethod
    def zero(grip: float = -1.0) -> "Action":
        return Action(0.0, 0.0, grip)


@dataclass(frozen=True)
class TaskSpec:
    source: int
    relation: str
    target: int

    def __post_init__(self):
        if self.relation not in RELATIONS:
            raise ValueError(f"unknown relation {self.relation!r}")
        if self.source == self.target:
            raise ValueError("source and target must differ")


@dataclass(frozen=True)
class WorldState:
    scene: SceneSpec
    blocks: tuple[BlockState, ...]
    ee: EEState

    def to_json(self) -> dict:
        return {
            "blocks": [{"x": b.x, "z": b.z} for b in self.blocks],
            "ee": {
                "x": self.ee.x,
                "z": self.ee.z,
                "grip": self.ee.grip,
                "holding": self.ee.holding,
            },
        }

    @staticmethod
    def from_json(obj: dict, scene: SceneSpec) -> "WorldState":
        return WorldState(
            scene=scene,
            blocks=tuple(BlockState(b["x"], b["z"]) for b in obj["blocks"]),
            ee=EEState(
                obj["ee"]["x"], obj["ee"]["z"], obj["ee"]["grip"], obj["ee"]["holding"]
            ),
        )


def new_scene(seed: int, ood: bool = False) -> SceneSpec:
    """Sample a 4-block scene, deterministic in (seed, ood).

    Block x positions are drawn uniformly over configurations whose pairwise
    center separations are all >= MIN_SEPARATION (spacing transform: jitter the
    gaps, then re-add the minimum gap). OOD scenes use one (shape, color) pair
    for every block.
    """
    rng = np.random.default_rng([int(seed), int(ood)])
    lo = TABLE_EXTENT[0] + SPAWN_MARGIN
    hi = TABLE_EXTENT[1] - SPAWN_MARGIN
    slack = (hi - lo) - (N_BLOCKS - 1) * MIN_SEPARATION
    ys = np.sort(rng.uniform(0.0, slack, size=N_BLOCKS))
    xs = lo + ys + MIN_SEPARATION * np.arange(N_BLOCKS)

    if ood:
        shape = SHAPES[rng.integers(len(SHAPES))]
        color = COLOR_NAMES[rng.integers(len(COLOR_NAMES))]
        pairs = [(shape, color)] * N_BLOCKS
    else:
        pairs = [
            (SHAPES[rng.integers(len(SHAPES))], COLOR_NAMES[rng.integers(len(COLOR_NAMES))])
            for _ in range(N_BLOCKS)
        ]

    blocks = tuple(
        BlockSpec(shape=s, color=c, x=float(x)) for (s, c), x in zip(pairs, xs)
    )
    return SceneSpec(blocks=blocks, seed=int(seed), ood=bool(ood))


def initial_state(scene: SceneSpec, config: WorldConfig = WorldConfig()) -> WorldState:
    """All blocks resting on the table, gripper open at carry height mid-table."""
    mid = 0.5 * (scene.table_extent[0] + scene.table_extent[1])
    return WorldState(
        scene=scene,
        blocks=tuple(BlockState(b.x, 0.0) for b in scene.blocks),
        ee=EEState(x=mid, z=config.carry_height, grip=-1.0, holding=None),
    )


def _support_top(blocks: tuple[BlockState, ...], x: float, below: float, skip: int) -> float:
    """Height of the highest support under x: the table, or the top of any
    block overlapping x by at least half a diameter whose top is not above
    `below`."""
    top = 0.0
    for j, b in enumerate(blocks):
        if j == skip:
            continue
        if abs(b.x - x) <= BLOCK_DIAMETER / 2 + 1e-12 and b.top <= below + 1e-9:
            top = max(top, b.top)
    return top


def step(state: WorldState, action: Action, config: WorldConfig = WorldConfig()) -> WorldState:
    """Advance the world one tick. All inputs are clamped, never rejected.

    Gripper semantics: grip > 0 is closed. A sign crossing from open to closed
    grasps the nearest block whose top is within grasp_radius of the
    end-effector; closed to open releases, and the block drops straight down
    onto the highest support at its x.
    """
    ms = config.max_step
    dx = float(np.clip(action.dx, -ms, ms))
    dz = float(np.clip(action.dz, -ms, ms))
    grip = float(np.clip(action.grip, -1.0, 1.0))

    ee_x = float(np.clip(state.ee.x + dx, *state.scene.table_extent))
    ee_z = float(np.clip(state.ee.z + dz, 0.0, config.z_max))

    was_closed = state.ee.closed
    now_closed = grip > 0.0
    holding = state.ee.holding
    blocks = list(state.blocks)

    if holding is None and now_closed and not was_closed:
        best, best_d = None, config.grasp_radius
        for i, b in enumerate(blocks):
            d = math.hypot(b.x - ee_x, b.top - ee_z)
            if d <= best_d:
                best, best_d = i, d
        holding = best

    if holding is not None:
        if now_closed:
            blocks[holding] = BlockState(x=ee_x, z=ee_z - BLOCK_DIAMETER)
        else:
            # Release: fall to the highest support at the current x.
            b = blocks[holding]
            blocks[holding] = BlockState(x=b.x, z=_support_top(tuple(blocks), b.x, b.z, holding))
            holding = None

    return WorldState(
        scene=state.scene,
        blocks=tuple(blocks),
        ee=EEState(x=ee_x, z=ee_z, grip=grip, holding=holding),
    )


def goal_location(task: TaskSpec, state: WorldState) -> tuple[float, float]:
    """Where the source block's bottom should end up, given the current state.

    on_top_of: the target's center x at the target's top. left_of/right_of:
    two diameters to that side of the target, at table level.
    """
    t = state.blocks[task.target]
    if task.relation == "on_top_of":
        return (t.x, t.top)
    off = 2.0 * BLOCK_DIAMETER
    return (t.x - off, 0.0) if task.relation == "left_of" else (t.x + off, 0.0)
