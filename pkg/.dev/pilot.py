"""Dev pilot: does the leakage ablation reproduce directionally at reduced scale?"""
import json, time, sys
from pathlib import Path
import torch
from loc.config import RunConfig
from loc.training import TrainConfig, PretrainConfig, pretrain_generator
from loc.synthdata import gen_pair_dataset, gen_quad_evalset, load_pair_dataset
from loc.unet import build_generator
from loc.evaluation import run_ablation, ablation_verdict, lora_consistency
from loc.checkpoint import save_checkpoint, module_arrays

root = Path("/root/pkg/.dev/pilot")
root.mkdir(parents=True, exist_ok=True)
t0 = time.time()

cfg = RunConfig.from_dict({
    "seed": 0,
    "image_size": 64,
    "schedule": {"kind": "linear_beta", "steps": 1000},
    "sample_steps": 30,
    "pretrain": {"lr": 2e-4, "batch_size": 16, "epochs": 12},
    "train": {"lr": 1e-4, "batch_size": 8, "epochs": 13, "checkpoint_every": 0},
})

if not (root / "pairs" / "manifest.json").exists():
    gen_pair_dataset(500, root / "pairs", seed=100, size=64)
    gen_quad_evalset(60, root / "quads", seed=200, size=64)
print(f"[{time.time()-t0:.0f}s] data ready", flush=True)

gen_dir = root / "generator"
model = build_generator(cfg.generator, cfg.seed)
if (gen_dir / "manifest.json").exists():
    from loc.checkpoint import load_checkpoint, load_module_arrays
    load_module_arrays(model, load_checkpoint(gen_dir).tensors, "unet.")
    model.freeze(); model.eval()
    print(f"[{time.time()-t0:.0f}s] generator loaded", flush=True)
else:
    data = load_pair_dataset(root / "pairs")
    pretrain_generator(data, model, cfg.build_schedule(), cfg.pretrain)
    save_checkpoint(module_arrays(model, "unet."), gen_dir, config={"generator": cfg.generator.to_dict()})
    print(f"[{time.time()-t0:.0f}s] generator pretrained", flush=True)

rep_on, rep_off = run_ablation(
    root / "pairs", root / "quads", cfg, root / "ablate",
    flag="reverse", model=model, eval_steps=30,
)
print(f"[{time.time()-t0:.0f}s] reverse ablation done", flush=True)
v = ablation_verdict(rep_on, rep_off, "reverse")
print(json.dumps(v, indent=2), flush=True)
print("on aggregates:", json.dumps(rep_on.aggregates), flush=True)
print("off aggregates:", json.dumps(rep_off.aggregates), flush=True)

rep_on2, rep_off2 = run_ablation(
    root / "pairs", root / "quads", cfg, root / "ablate",
    flag="exchange", model=model, eval_steps=30,
)
print(f"[{time.time()-t0:.0f}s] exchange ablation done", flush=True)
v2 = ablation_verdict(rep_on2, rep_off2, "exchange")
print(json.dumps(v2, indent=2), flush=True)
print(f"[{time.time()-t0:.0f}s] ALL DONE", flush=True)
