"""Handwritten-digit comparison: projection classifier vs linear baselines.

Loads an optdigits-format file (64 pixel values plus a digit per line),
relabels it as a binary task, and compares the random-projection
classifier with logistic regression and a linear SVM over repeated
splits.  Pass the data file path as the first argument; with
scikit-learn installed the bundled 1797-point corpus is used as a
fallback.
"""

import sys
import tempfile

from ntarp import data, experiments


def corpus_path():
    if len(sys.argv) > 1:
        return sys.argv[1]
    from sklearn.datasets import load_digits  # fallback corpus

    bunch = load_digits()
    tmp = tempfile.NamedTemporaryFile(
        "w", suffix=".csv", delete=False, encoding="utf-8"
    )
    with tmp as fh:
        for x, y in zip(bunch.data.astype(int), bunch.target):
            fh.write(",".join(map(str, list(x) + [int(y)])) + "\n")
    return tmp.name


digits = data.load_optdigits(corpus_path())
print(f"loaded {digits.n_points} digits")

for task in ("even_odd", "zero_one"):
    _, summary = experiments.run_digits(digits, task, n=500, reps=3)
    print(f"\ntask: {task}")
    for row in summary:
        print(
            f"  {row['method']:>9}: train {row['mean_train_error']:.3f} "
            f"+/- {row['std_train_error']:.3f}, test {row['mean_test_error']:.3f}, "
            f"gap {row['mean_gap']:.3f}"
        )
