"""Scripted success rules.

Pick: the source block's vertical displacement from its initial rest height
exceeds one diameter (strictly) for more than 5 timesteps. Place: while pick
holds, some timestep puts the source within the relation's planar threshold
(3 diameters for left/right, 1 for stacking) and within half a diameter
vertically of the goal. Goals are recomputed per timestep from that state.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .core import BLOCK_DIAMETER, TaskSpec, WorldState, goal_location

PICK_MIN_TIMESTEPS = 5  # strict: need count > 5


@dataclass(frozen=True)
class SuccessReport:
    pick: bool
    place: bool
    overall: bool
    first_success_t: Optional[int]


def _lifted(state: WorldState, task: TaskSpec, rest_z: float) -> bool:
    return state.blocks[task.source].z - rest_z > BLOCK_DIAMETER


def _at_goal(state: WorldState, task: TaskSpec) -> bool:
    gx, gz = goal_location(task, state)
    src = state.blocks[task.source]
    planar_max = BLOCK_DIAMETER if task.relation == "on_top_of" else 3 * BLOCK_DIAMETER
    return abs(src.x - gx) <= planar_max and abs(src.z - gz) <= BLOCK_DIAMETER / 2


def evaluate_success(trajectory: Sequence[WorldState], task: TaskSpec) -> SuccessReport:
    if not trajectory:
        raise ValueError("empty trajectory")
    rest_z = trajectory[0].blocks[task.source].z

    lift_count = 0
    pick_t: Optional[int] = None
    place_t: Optional[int] = None
    for t, state in enumerate(trajectory):
        if _lifted(state, task, rest_z):
            lift_count += 1
            if pick_t is None and lift_count > PICK_MIN_TIMESTEPS:
                pick_t = t
        if place_t is None and _at_goal(state, task):
            place_t = t

    pick = pick_t is not None
    place = pick and place_t is not None
    overall = pick and place
    first = max(pick_t, place_t) if overall else None
    return SuccessReport(pick=pick, place=place, overall=overall, first_success_t=first)


def first_success_step(trajectory: Sequence[WorldState], task: TaskSpec) -> Optional[int]:
    """First index t at which the prefix trajectory[:t+1] is an overall success."""
    return evaluate_success(trajectory, task).first_success_t
