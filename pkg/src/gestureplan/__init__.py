"""Gesture- and language-conditioned video planning on a deterministic tabletop world.

Subpackages:
    worldsim     -- 2.5-D side-view block world, scripted expert, success rules
    datagen      -- demonstration generation, gesture annotation, prompts, datasets
    conditioning -- gesture videos, toy tokenizer, hidden-state construction
    vdm          -- tiny latent video diffusion (autoencoder, UNet, gesture branch, sampler)
    diva         -- video-conditioned behavior cloning policy and rollout executor
    evalharness  -- PSNR/SSIM, programmatic alignment proxy, ablation grids, reports
    service      -- HTTP API for the interactive client
"""

__version__ = "0.1.0"
