# Copyright 2026 The vqacurate Authors.
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     https://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Expected seeded outputs for the text filter, splitter and review sampler.

Writes tests/fixtures/expected_rng.json.
"""

import json
import os

from seeded import SplitMix64, derive_seed, pair_id

HERE = os.path.dirname(os.path.abspath(__file__))
OUT = os.path.join(HERE, "..", "fixtures", "expected_rng.json")

RUN_SEED = 7
FIXTURE = {
    "record_id": "rec-fixture-1",
    "question": "Which imaging modality was used to acquire this image?",
    "options": ["Axial CT", "Coronal MRI", "Ultrasound", "Plain radiograph"],
    "answer_letter": "A",
}


def shuffle_permutation(seed):
    order = [0, 1, 2, 3]  # order[shuffled position] = original position
    SplitMix64(seed).shuffle(order)
    perm = [0] * 4
    for k, original in enumerate(order):
        perm[original] = k
    return perm


def fixture_trials():
    pid = pair_id(FIXTURE["record_id"], FIXTURE["question"], FIXTURE["options"])
    gold = "ABCD".index(FIXTURE["answer_letter"])
    trials = []
    for t in range(5):
        seed = derive_seed(RUN_SEED, "shuffle", pid, t)
        perm = shuffle_permutation(seed)
        trials.append({"trial_seed": str(seed), "permutation": perm,
                       "constant_a_correct": perm[gold] == 0})
    n_correct = sum(t["constant_a_correct"] for t in trials)
    uniform = []
    answerer_seed = 99
    for t in range(5):
        rng = SplitMix64(derive_seed(answerer_seed, "uniform-answerer", pid, t))
        uniform.append("ABCD"[rng.index(4)])
    return {"pair": FIXTURE, "pair_id": pid, "run_seed": RUN_SEED, "trials": trials,
            "constant_a_n_correct": n_correct, "constant_a_dismissed": n_correct >= 3,
            "uniform_answerer_seed": answerer_seed, "uniform_answerer_letters": uniform}


def partition(ids, seed):
    ids = sorted(set(ids))
    SplitMix64(derive_seed(seed, "filter-partition")).shuffle(ids)
    half = (len(ids) + 1) // 2
    return sorted(ids[:half]), sorted(ids[half:])


def review_sample(test_ids, n, seed):
    pool = list(test_ids)
    SplitMix64(derive_seed(seed, "review-sample")).shuffle(pool)
    return pool[:min(n, len(pool))]


def split(pairs, budget, seed):
    groups = {}
    for pid, image in pairs:
        groups.setdefault("image:" + image, []).append(pid)
    images = sorted(groups)
    SplitMix64(derive_seed(seed, "split-images")).shuffle(images)
    test, train, count = [], [], 0
    for image in images:
        if count < budget:
            test += groups[image]
            count += len(groups[image])
        else:
            train += groups[image]
    return sorted(train), sorted(test)


def main():
    ids = ["p%02d" % i for i in range(11)]
    part_a, part_b = partition(ids, RUN_SEED)
    test_ids = ["t%03d" % i for i in range(100)]
    # 12 images with 1..4 pairs each.
    split_pairs = []
    for img in range(12):
        for k in range(img % 4 + 1):
            split_pairs.append(("s%02d_%d" % (img, k), "img%02d.png" % img))
    train, test = split(split_pairs, 9, RUN_SEED)
    out = {
        "text_filter_fixture": fixture_trials(),
        "partition": {"ids": ids, "seed": RUN_SEED, "part_a": part_a, "part_b": part_b},
        "review_sample": {"test_ids": test_ids, "review_n": 10, "seed": RUN_SEED,
                          "candidates": review_sample(test_ids, 10, RUN_SEED)},
        "split": {"pairs": [list(p) for p in split_pairs], "test_pairs": 9, "seed": RUN_SEED,
                  "train": train, "test_initial": test},
        "raw_stream": {"seed": 17, "first_draws": [str(d) for d in
                                                   (lambda r: [r.next() for _ in range(4)])(SplitMix64(17))],
                       "derive_seed_17_abc": str(derive_seed(17, "a", "b", "c"))},
    }
    with open(OUT, "w", encoding="utf-8") as f:
        json.dump(out, f, indent=2, sort_keys=True)
        f.write("\n")


if __name__ == "__main__":
    main()
