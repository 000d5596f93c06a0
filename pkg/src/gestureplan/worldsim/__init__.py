from .core import (
    Action,
    BlockSpec,
    BlockState,
    EEState,
    SceneSpec,
    TaskSpec,
    WorldConfig,
    WorldState,
    COLOR_NAMES,
    COLOR_RGB,
    RELATIONS,
    SHAPES,
    goal_location,
    new_scene,
    initial_state,
    step,
)
from .render import FRAME_H, FRAME_W, render, world_to_pixel, pixel_to_world
from .expert import scripted_policy, sample_task
from .success import SuccessReport, evaluate_success, first_success_step

__all__ = [
    "Action",
    "BlockSpec",
    "BlockState",
    "EEState",
    "SceneSpec",
    "TaskSpec",
    "WorldConfig",
    "WorldState",
    "COLOR_NAMES",
    "COLOR_RGB",
    "RELATIONS",
    "SHAPES",
    "FRAME_H",
    "FRAME_W",
    "SuccessReport",
    "goal_location",
    "new_scene",
    "initial_state",
    "step",
    "render",
    "world_to_pixel",
    "pixel_to_world",
    "scripted_policy",
    "sample_task",
    "evaluate_success",
    "first_success_step",
]
