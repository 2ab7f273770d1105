"""A small augmented training run, step by step.

Builds a synthetic pool, draws a balanced split, trains the augmented arm for
a few dozen iterations at narrow widths and prints what happened: the four
losses, the validation trace and when the assistant generator was refreshed.

    python demos/01_training_walkthrough.py
"""

import numpy as np

from advaug import TrainConfig, make_splits, synth_generate, train

# 40 images per negative subclass and 120 positives, 32x32, lightly ambiguous
pool = synth_generate(40, 32, seed=0, ambiguity=0.5)
split = make_splits(pool, n_train=60, n_val=60, seed=0)
print(f"pool {len(pool)} images; train {len(split.train)}, validation {len(split.validation)}")

# the real/fake discriminator batches come from the validation pool by default
cfg = TrainConfig.for_arm("augmented", image_size=32, iterations=40, batch_size=16, eval_interval=5,
                          gen_width=4, disc_width=8, cls_width=8, seed=1)
res = train(cfg, split)

print("\n iter   loss_d  loss_g_adv  loss_g_cls  loss_c   val_acc")
for r in res.records:
    if r.val_acc is None:
        continue
    print(f"{r.iteration:5d}  {r.loss_d:7.4f}  {r.loss_g_adv:10.4f}  {r.loss_g_cls:10.4f}  "
          f"{r.loss_c:6.4f}  {r.val_acc:8.3f}{'  *snapshot' if r.snapshot else ''}")

# each classifier step saw originals, live generator output and assistant output
print("\nclassifier batch sizes:", sorted(set(res.c_batch_sizes)))
print("assistant refreshed at:", [it for it, _ in res.snapshot_log])
print(f"best validation accuracy {res.best_val_acc:.3f}")

# the generator's mask lives in (0, 2); after a short run it is still close to 1
g = res.networks["generator"]
x, _ = split.arrays("validation")
mask, generated = g.forward(x[:8], "eval")
m = mask.data
print(f"\nmask range [{m.min():.3f}, {m.max():.3f}], mean {m.mean():.3f}")
print(f"mean |generated - original| = {np.abs(generated.data - x[:8]).mean():.4f}")
