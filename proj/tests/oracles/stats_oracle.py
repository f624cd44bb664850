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

"""Fixtures and independent recounts for the dataset statistics.

Writes:
  fixtures/questions1000.txt      1,000 questions, one per line
  fixtures/pairs_stats.jsonl      400 pairs over 90 records
  fixtures/expected_stats.json    prefix tree, histograms, option balance and
                                  pairs per image recounted here
"""

import json
import os
import random
import string

from seeded import pair_id

HERE = os.path.dirname(os.path.abspath(__file__))
FIX = os.path.join(HERE, "..", "fixtures")

OPENERS = ["What", "what", "Which", "WHICH", "How", "Where", "What is", "What is the",
           "Which of the following", "How many", "Is", "What does the"]
WORDS = ["lesion", "image", "scan", "arrow", "shown", "modality", "organ", "finding",
         "in", "the", "of", "this", "patient's", "left", "right", "CT", "MRI", "(arrow)",
         "visible?", "indicated?", "used", "most", "likely", "diagnosis", "-", "?"]


def tokenize(text):
    out = []
    for raw in text.lower().split():
        tok = raw.strip(string.punctuation)
        if tok:
            out.append(tok)
    return out


def build_tree(questions, depth=4):
    root = {"token": "", "count": 0, "terminal": 0, "children": {}}
    for q in questions:
        node = root
        node["count"] += 1
        for tok in tokenize(q)[:depth]:
            node = node["children"].setdefault(
                tok, {"token": tok, "count": 0, "terminal": 0, "children": {}})
            node["count"] += 1
        node["terminal"] += 1

    def freeze(node):
        kids = sorted(node["children"].values(), key=lambda n: (-n["count"], n["token"]))
        return {"token": node["token"], "count": node["count"], "terminal": node["terminal"],
                "children": [freeze(k) for k in kids]}

    return {"depth": depth, "root": freeze(root)}


def percent_histogram(lengths):
    counts = {}
    for n in lengths:
        counts[n] = counts.get(n, 0) + 1
    return {str(k): 100.0 * v / len(lengths) for k, v in sorted(counts.items())}


def make_question(rng):
    n = rng.choice([0, 1, 2, 3, 5, 7, 9, 12])
    words = [rng.choice(WORDS) for _ in range(n)]
    return " ".join([rng.choice(OPENERS)] + words)


def main():
    rng = random.Random(1000)
    questions = [make_question(rng) for _ in range(1000)]
    questions[10] = "?"  # no tokens at all
    questions[11] = "What"
    with open(os.path.join(FIX, "questions1000.txt"), "w", encoding="utf-8") as f:
        f.write("\n".join(questions) + "\n")

    pairs = []
    answers = ["Axial CT", "Left lower lobe consolidation", "MRI", "A well-defined mass in the liver",
               "Hematoxylin and eosin", "Pleural effusion", "None"]
    for i in range(400):
        record = "r%03d" % rng.randrange(90) if i >= 90 else "r%03d" % i
        q = make_question(rng)
        options = rng.sample(answers, 4)
        letter = rng.choices("ABCD", weights=[24, 31, 29, 16])[0]
        pairs.append({"pair_id": pair_id(record, q, options), "record_id": record,
                      "image_ref": "img/" + record + ".png", "question_index": i % 5 + 1,
                      "question": q,
                      "options": [{"letter": l, "text": t} for l, t in zip("ABCD", options)],
                      "answer_letter": letter, "stage": "kept_by_classifier", "flags": []})
    with open(os.path.join(FIX, "pairs_stats.jsonl"), "w", encoding="utf-8") as f:
        for p in pairs:
            f.write(json.dumps(p, sort_keys=True) + "\n")

    gold_text = [p["options"]["ABCD".index(p["answer_letter"])]["text"] for p in pairs]
    balance = {l: sum(p["answer_letter"] == l for p in pairs) / len(pairs) for l in "ABCD"}
    records = {p["record_id"] for p in pairs}
    expected = {
        "prefix_tree_questions1000": build_tree(questions),
        "pairs": {
            "question_length_histogram": percent_histogram([len(p["question"].split()) for p in pairs]),
            "answer_length_histogram": percent_histogram([len(t.split()) for t in gold_text]),
            "option_balance": balance,
            "pairs_per_image": len(pairs) / len(records),
            "image_count": len(records),
            "prefix_tree": build_tree([p["question"] for p in pairs]),
        },
    }
    with open(os.path.join(FIX, "expected_stats.json"), "w", encoding="utf-8") as f:
        json.dump(expected, f, indent=1, sort_keys=True)
        f.write("\n")


if __name__ == "__main__":
    main()
