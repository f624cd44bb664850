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

"""Builds the 200-generation parser fixture and its expectations.

Each generation is assembled from known blocks, so the expected pairs and
issue kinds are written down while the text is built rather than recovered
by parsing it. Output:
  fixtures/parser_corpus.jsonl     RawGeneration rows
  fixtures/parser_expected.jsonl   {record_id, category, pairs, issues}
"""

import json
import os
import random

HERE = os.path.dirname(os.path.abspath(__file__))
FIX = os.path.join(HERE, "..", "fixtures")

SUBJECTS = ["lesion", "mass", "opacity", "nodule", "fracture", "effusion", "cyst",
            "thickening", "calcification", "collection"]
PLACES = ["left lung", "right kidney", "liver", "spleen", "brain", "pelvis",
          "mediastinum", "thyroid", "femur", "pancreas"]
STEMS = ["What is the most likely diagnosis for the {s} in the {p}?",
         "Which structure is adjacent to the {s} in the {p}?",
         "What imaging technique shows the {s} in the {p}?",
         "Where is the {s} located relative to the {p}?",
         "How would you describe the {s} seen in the {p}?",
         "What does the arrow point to near the {s} in the {p}?"]
OPTIONS = ["Axial CT", "Coronal MRI", "Ultrasound", "Plain radiograph", "PET scan",
           "Hepatic cyst", "Metastasis", "Abscess", "Hematoma", "Lymphoma",
           "Anterior", "Posterior", "Medial", "Lateral", "Superior",
           "Well circumscribed", "Irregular margins", "Spiculated", "Lobulated"]
PREAMBLES = ["", "Here are five questions about the image.\n\n", "Sure.\n",
             "Questions based on the caption:\n"]


class Builder:
    def __init__(self, rng):
        self.rng = rng

    def block(self, index, question=None):
        q = question or self.rng.choice(STEMS).format(s=self.rng.choice(SUBJECTS),
                                                      p=self.rng.choice(PLACES))
        return {"question_index": index, "question": q,
                "options": self.rng.sample(OPTIONS, 4), "answer": self.rng.choice("ABCD")}

    def blocks(self, n):
        out, seen = [], set()
        while len(out) < n:
            b = self.block(len(out) + 1)
            if b["question"].lower() in seen:
                continue
            seen.add(b["question"].lower())
            out.append(b)
        return out


def render(b, style):
    o = b["options"]
    i, q, a = b["question_index"], b["question"], b["answer"]
    if style == "line":
        return "i:%d question:%s choice: A:%s B:%s C:%s D:%s answer: %s\n" % (
            i, q, o[0], o[1], o[2], o[3], a)
    if style == "multiline":
        return ("i: %d\nquestion: %s\nchoice:\nA: %s\nB: %s\nC: %s\nD: %s\nanswer: %s\n\n"
                % (i, q, o[0], o[1], o[2], o[3], a))
    if style == "backtick":
        return ("i:`%d` question:`%s` choice: A:`%s` B:`%s` C:`%s` D:`%s` answer:`%s`\n"
                % (i, q, o[0], o[1], o[2], o[3], a))
    if style == "quoted":
        return ("i:`%d' question:`%s' choice: `A:%s B:%s C:%s D:%s'  answer: The correct option(%s).\n"
                % (i, q, o[0], o[1], o[2], o[3], a))
    if style == "phrase":
        return ("I: %d\nQuestion: %s\nChoice: A: %s B: %s C: %s D: %s\n"
                "Answer: The correct option is %s.\n" % (i, q, o[0], o[1], o[2], o[3], a))
    if style == "loose":
        return ("i:%d Question:  %s\nChoices:\n a: %s\n b: %s\n c: %s\n d: %s\nANSWER: (%s)\n"
                % (i, q, o[0], o[1], o[2], o[3], a.lower()))
    raise ValueError(style)


def expect(b):
    return {"question_index": b["question_index"], "question": b["question"],
            "options": b["options"], "answer": b["answer"]}


def main():
    rng = random.Random(20230518)
    build = Builder(rng)
    rows, expected = [], []

    def add(category, text, pairs, issues, failed=False):
        rid = "gen%03d" % len(rows)
        rows.append({"record_id": rid, "backend_id": "fixture", "response_text": text,
                     "request_fingerprint": "%064x" % len(rows), "failed": failed,
                     "failure_reason": "retries exhausted: timeout" if failed else "",
                     "retries": 0})
        expected.append({"record_id": rid, "category": category,
                         "pairs": [expect(p) for p in pairs], "issues": issues})

    for k in range(75):
        style = ["line", "multiline", "backtick", "phrase", "quoted"][k % 5]
        n = 5 if k % 5 else rng.randint(1, 4)
        bs = build.blocks(n)
        add("well_formed", rng.choice(PREAMBLES) + "".join(render(b, style) for b in bs), bs, [])

    for k in range(30):
        bs = build.blocks(5)
        add("loose", "".join(render(b, "loose") for b in bs), bs, [])

    for k in range(25):
        bs = build.blocks(rng.randint(2, 5))
        whole, last = bs[:-1], bs[-1]
        body = "".join(render(b, "line") for b in whole)
        o = last["options"]
        head = "i:%d question:%s choice:" % (last["question_index"], last["question"])
        cut = k % 5
        if cut == 0:
            tail, kind = head + " A:%s B:%s C:%s D:%s" % tuple(o), "missing_field"
        elif cut == 1:
            tail, kind = head + " A:%s B:%s C:%s" % tuple(o[:3]), "missing_option"
        elif cut == 2:
            tail, kind = head + " A:%s B:%s C:%s D:" % tuple(o[:3]), "missing_option"
        elif cut == 3:
            tail, kind = "i:%d question:%s" % (last["question_index"], last["question"]), "missing_field"
        else:
            tail, kind = "i:%d" % last["question_index"], "missing_field"
        add("truncated", body + tail, whole, [kind])

    for k in range(25):
        bs = build.blocks(4)
        if k % 2 == 0:
            # Later block repeats an earlier question under a new index.
            src = bs[rng.randrange(3)]
            rep = build.block(5, question=src["question"].upper() if k % 4 == 0 else src["question"])
            add("duplicate", "".join(render(b, "line") for b in bs + [rep]), bs, ["duplicate_block"])
        else:
            rep = build.block(2)
            rep["question_index"] = bs[1]["question_index"]
            text = "".join(render(b, "line") for b in bs[:2] + [rep] + bs[2:])
            add("duplicate", text, bs, ["duplicate_block"])

    refusals = ["I'm sorry, but I cannot generate questions about this image.",
                "As an AI language model, I am unable to generate questions without the image.",
                "I apologize, but the caption does not contain enough information.",
                "I can’t create questions from this caption."]
    for k in range(20):
        if k < 10:
            add("refusal", refusals[k % 4], [], ["refusal_text"])
        else:
            bs = build.blocks(3)
            text = "".join(render(b, "line") for b in bs) + "\n" + refusals[k % 4] + "\n"
            add("refusal", text, bs, ["refusal_text"])

    bad = ["A or B", "E", "none of the above", "B and C", ""]
    for k in range(10):
        bs = build.blocks(3)
        broken = build.block(4)
        o = broken["options"]
        line = "i:4 question:%s choice: A:%s B:%s C:%s D:%s answer: %s\n" % (
            broken["question"], o[0], o[1], o[2], o[3], bad[k % 5])
        add("bad_answer", "".join(render(b, "line") for b in bs) + line, bs, ["bad_answer_letter"])

    prose = ["", "The image shows a chest radiograph with bilateral infiltrates.",
             "Question generation produced no structured output.", "   \n\n  "]
    for k in range(10):
        add("no_blocks", prose[k % 4], [], ["no_blocks"], failed=(k % 4 == 0))

    for k in range(5):
        bs = build.blocks(6)
        add("six_blocks", "".join(render(b, "line") for b in bs), bs[:5], ["duplicate_block"])

    assert len(rows) == 200
    with open(os.path.join(FIX, "parser_corpus.jsonl"), "w", encoding="utf-8") as f:
        for r in rows:
            f.write(json.dumps(r, sort_keys=True, ensure_ascii=False) + "\n")
    with open(os.path.join(FIX, "parser_expected.jsonl"), "w", encoding="utf-8") as f:
        for e in expected:
            f.write(json.dumps(e, sort_keys=True, ensure_ascii=False) + "\n")


if __name__ == "__main__":
    main()
