"""Train briefly, checkpoint, then dump masks and generated images as PPM files.

The same pipeline as ``advaug augment``: masks are written divided by two so a
mask value of 1 (leave the pixel alone) shows up as mid-grey.

    python demos/02_masks_on_disk.py [out_dir]
"""

import sys
import tempfile
from pathlib import Path

import numpy as np

from advaug import TrainConfig, checkpoint_save, make_splits, synth_generate, train
from advaug.cli import main as advaug_cli
from advaug.data import read_ppm

out = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(tempfile.mkdtemp(prefix="advaug_masks_"))
data_dir = out / "images"
pool = synth_generate(12, 32, seed=3, out_dir=data_dir)
split = make_splits(pool, n_train=36, n_val=36, seed=0)

cfg = TrainConfig.for_arm("augmented", image_size=32, iterations=30, batch_size=12, eval_interval=10,
                          gen_width=4, disc_width=8, cls_width=8)
res = train(cfg, split)
ckpt = out / "run.aaf"
checkpoint_save(res.networks, ckpt)
print(f"checkpoint {ckpt} ({ckpt.stat().st_size} bytes)")

advaug_cli(["augment", "--checkpoint", str(ckpt), "--dataset", str(data_dir), "--out", str(out / "aug")])

# how far did each subclass get pushed?
for sub in ("excavator", "dump_truck", "mixer", "dozer"):
    files = sorted((out / "aug" / "mask" / sub).glob("*.ppm"))
    masks = np.stack([read_ppm(f) for f in files]) * 2
    print(f"{sub:11s} {len(files):3d} masks, mean {masks.mean():.3f}, "
          f"spread {masks.std():.4f}")
print("\nview with any PPM viewer, e.g.", out / "aug" / "generated" / "excavator")
