"""Scripted waypoint expert and task sampling.

The expert is a pure function of (state, task): the controller phase is
reconstructed from the state every call, so rollouts are replayable from any
point. Motion uses clamped partial steps, which makes waypoint arrival exact.
"""
from __future__ import annotations

import numpy as np

from .core import (
    BLOCK_DIAMETER,
    RELATIONS,
    Action,
    SceneSpec,
    TaskSpec,
    WorldConfig,
    WorldState,
    _support_top,
    goal_location,
    initial_state,
)

_TOL = 1e-7

# Valid near-task goals: on the table with margin, clear of other blocks, and
# far enough from the source that place success cannot hold at t=0.
_GOAL_XMIN = 0.03
_GOAL_XMAX = 0.45
_GOAL_CLEARANCE = 0.75 * BLOCK_DIAMETER
_MIN_SOURCE_GOAL_DIST = 3.2 * BLOCK_DIAMETER


def _clip_to(delta: float, max_step: float) -> float:
    return float(np.clip(delta, -max_step, max_step))


def scripted_policy(state: WorldState, task: TaskSpec, config: WorldConfig = WorldConfig()) -> Action:
    """One expert action: approach, grasp, carry to the goal, release, retreat."""
    ms = config.max_step
    carry = config.carry_height
    ee = state.ee
    src = state.blocks[task.source]
    goal_x, goal_z = goal_location(task, state)

    if ee.holding == task.source:
        if abs(ee.x - goal_x) > _TOL:
            if ee.z < carry - _TOL:
                return Action(0.0, _clip_to(carry - ee.z, ms), ee.grip)
            return Action(_clip_to(goal_x - ee.x, ms), 0.0, ee.grip)
        place_ee_z = _support_top(state.blocks, goal_x, float("inf"), task.source) + BLOCK_DIAMETER
        if ee.z > place_ee_z + _TOL:
            return Action(0.0, _clip_to(place_ee_z - ee.z, ms), ee.grip)
        return Action(0.0, 0.0, -1.0)  # release

    placed = abs(src.x - goal_x) < 1e-6 and abs(src.z - goal_z) < 1e-6
    if placed:
        if ee.z < carry - _TOL:
            return Action(0.0, _clip_to(carry - ee.z, ms), -1.0)
        return Action.zero()

    if abs(ee.x - src.x) > _TOL:
        # Approach diagonally at or above carry height; nothing is held yet.
        return Action(_clip_to(src.x - ee.x, ms), _clip_to(carry - ee.z, ms), -1.0)
    if ee.z > src.top + _TOL:
        return Action(0.0, _clip_to(src.top - ee.z, ms), -1.0)
    return Action(0.0, 0.0, 1.0)  # close on the source block


def valid_tasks(scene: SceneSpec) -> list[TaskSpec]:
    """All (source, relation, target) triples the expert can demonstrate."""
    xs = [b.x for b in scene.blocks]
    out = []
    for s in range(len(xs)):
        for rel in RELATIONS:
            for t in range(len(xs)):
                if s == t:
                    continue
                task = TaskSpec(source=s, relation=rel, target=t)
                if rel == "on_top_of":
                    out.append(task)
                    continue
                gx = xs[t] - 2 * BLOCK_DIAMETER if rel == "left_of" else xs[t] + 2 * BLOCK_DIAMETER
                if not (_GOAL_XMIN <= gx <= _GOAL_XMAX):
                    continue
                if any(abs(xs[j] - gx) <= _GOAL_CLEARANCE for j in range(len(xs)) if j != s):
                    continue
                if abs(xs[s] - gx) <= _MIN_SOURCE_GOAL_DIST:
                    continue
                out.append(task)
    return out


def sample_task(scene: SceneSpec, rng: np.random.Generator) -> TaskSpec:
    tasks = valid_tasks(scene)
    if not tasks:
        raise RuntimeError("scene admits no valid task")
    return tasks[int(rng.integers(len(tasks)))]


def rollout_expert(
    scene: SceneSpec,
    task: TaskSpec,
    config: WorldConfig = WorldConfig(),
    max_steps: int = 100,
) -> tuple[list[WorldState], list[Action]]:
    """Run the expert to completion (retreat included), capped at max_steps."""
    states = [initial_state(scene, config)]
    actions: list[Action] = []
    for _ in range(max_steps):
        a = scripted_policy(states[-1], task, config)
        if a == Action.zero() and states[-1].ee.holding is None:
            break
        actions.append(a)
        from .core import step

        states.append(step(states[-1], a, config))
    return states, actions
