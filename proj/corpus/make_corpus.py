#!/usr/bin/env python3
"""Regenerates the bundled corpus. Run from anywhere; writes next to itself."""

import copy
import json
import os

OUT = os.path.dirname(os.path.abspath(__file__))


def dump(name, doc):
    with open(os.path.join(OUT, name), "w") as f:
        json.dump(doc, f, indent=2, sort_keys=True)
        f.write("\n")


def reality(time, cond, sit, state):
    return {"time": time, "condition": cond, "situator": sit, "state": state}


# ---------------------------------------------------------------- two-state toggle
# Two objects. o1's essence h1 toggles between lo and hi under "toggle" and
# holds under "stay"; o2's essence h2 always stays at lo. Two states close
# the transition table. Two perspectives give a past and a future view of
# the same realized stay-run.

STAY = {"o1": ["hold0", "stay"], "o2": ["hold0", "stay2"]}
TOGGLE = {"o1": ["hold0", "toggle"], "o2": ["hold0", "stay2"]}

SNAP_P0 = {"o1": [["h1", ["w0"]]], "o2": [["h2", ["w0"]]]}
SNAP_LO = {"o1": [["h1", ["lo"]]], "o2": [["h2", ["lo"]]]}
SNAP_HI = {"o1": [["h1", ["hi"]]], "o2": [["h2", ["lo"]]]}


def rule(h, frm, to):
    return {"essence": h, "from": frm, "to": to}


def state(sid, v1):
    return {
        "id": sid,
        "es": {"o1": ["h1"], "o2": ["h2"]},
        "g": [
            {"h1": ["w0"], "h2": ["w0"]},
            {"h1": [v1], "h2": ["lo"]},
        ],
        "gstar": [
            SNAP_P0,
            {"o1": [["h1", [v1]]], "o2": [["h2", ["lo"]]]},
        ],
        "theta": [
            {"o1": ["hold0"], "o2": ["hold0"]},
            {"o1": ["stay", "toggle"], "o2": ["stay2"]},
        ],
        "sensation": {"o1": "empty", "o2": "empty"},
        "relations": {"o1": [[], []], "o2": [[], []]},
    }


def sensation_family():
    fam = []
    for obj in ("o1", "o2"):
        for sid in ("s0", "s1"):
            for inp in (STAY, TOGGLE):
                fam.append({
                    "register": "empty",
                    "object": obj,
                    "state": sid,
                    "input": inp,
                    "result": "empty",
                })
    return [fam]


def toggle_structure():
    doc = build_toggle_structure()
    return copy.deepcopy(doc)


def build_toggle_structure():
    doc = {
        "signature": {
            "objects": ["o1", "o2"],
            "essences": ["h1", "h2"],
            "properties": [
                {"dim": 1, "domains": [["w0"]]},
                {"dim": 1, "domains": [["lo", "hi"]]},
            ],
            "actions": {
                "o1": [
                    [{"id": "hold0", "in": [rule("h1", ["w0"], ["w0"])], "ext": []}],
                    [
                        {"id": "stay",
                         "in": [rule("h1", ["lo"], ["lo"]), rule("h1", ["hi"], ["hi"])],
                         "ext": []},
                        {"id": "toggle",
                         "in": [rule("h1", ["lo"], ["hi"]), rule("h1", ["hi"], ["lo"])],
                         "ext": []},
                    ],
                ],
                "o2": [
                    [{"id": "hold0", "in": [rule("h2", ["w0"], ["w0"])], "ext": []}],
                    [{"id": "stay2", "in": [rule("h2", ["lo"], ["lo"])], "ext": []}],
                ],
            },
            "sra": ["empty"],
        },
        "states": [state("s0", "lo"), state("s1", "hi")],
        "transition": [
            {"from": "s0", "input": STAY, "to": "s0"},
            {"from": "s0", "input": TOGGLE, "to": "s1"},
            {"from": "s1", "input": STAY, "to": "s1"},
            {"from": "s1", "input": TOGGLE, "to": "s0"},
        ],
        "laws": [
            {"property": 0, "from": SNAP_P0, "actions": {"o1": "hold0", "o2": "hold0"},
             "deps": [], "to": [SNAP_P0]},
            {"property": 1, "from": SNAP_LO, "actions": {"o1": "toggle", "o2": "stay2"},
             "deps": [], "to": [SNAP_LO, SNAP_HI]},
            {"property": 1, "from": SNAP_HI, "actions": {"o1": "toggle", "o2": "stay2"},
             "deps": [], "to": [SNAP_LO, SNAP_HI]},
        ],
        "sensation_laws": sensation_family(),
        "dependencies": [
            {"state": sid, "property": p, "actions": b, "deps": []}
            for sid in ("s0", "s1")
            for p, b in ((0, {"o1": "hold0", "o2": "hold0"}),
                         (1, {"o1": "stay", "o2": "stay2"}),
                         (1, {"o1": "toggle", "o2": "stay2"}))
        ],
        "perspectives": [
            {
                "anchor": 1,
                "moments": {
                    "1": [reality(1, "e", "present", "s0"),
                          reality(1, "h", "present", "s0")],
                    "2": [reality(2, "e", "future", "s0"),
                          reality(2, "h", "future", "s1")],
                },
                "realized_inputs": {"1": STAY},
                "succ": [
                    {"from": reality(1, "e", "present", "s0"), "input": STAY,
                     "to": reality(2, "e", "future", "s0")},
                    {"from": reality(1, "h", "present", "s0"), "input": TOGGLE,
                     "to": reality(2, "h", "future", "s1")},
                ],
            },
            {
                "anchor": 2,
                "moments": {
                    "1": [reality(1, "e", "past", "s0")],
                    "2": [reality(2, "e", "present", "s0"),
                          reality(2, "h", "present", "s1")],
                },
                "realized_inputs": {"1": STAY, "2": STAY},
                "succ": [
                    {"from": reality(1, "e", "past", "s0"), "input": STAY,
                     "to": reality(2, "e", "present", "s0")},
                    {"from": reality(1, "e", "past", "s0"), "input": TOGGLE,
                     "to": reality(2, "h", "present", "s1")},
                    {"from": reality(2, "e", "present", "s0"), "input": STAY,
                     "to": reality(3, "e", "future", "s0")},
                    {"from": reality(2, "h", "present", "s1"), "input": TOGGLE,
                     "to": reality(3, "h", "future", "s0")},
                ],
            },
        ],
        "realized_inputs": {"1": STAY, "2": STAY},
    }
    return doc


# Each variant breaks exactly one axiom; everything a mutation would drag
# along (laws keyed on snapshots, action in-tables keyed on assignments)
# is patched so the other ten axioms still pass.

def break_a1(doc):
    doc["states"][1]["es"]["o2"] = []


def break_a2(doc):
    # h3 has a place but no non-spatial value and belongs to nobody.
    sig = doc["signature"]
    sig["essences"].append("h3")
    extra = ["h3", ["w0"]]
    for st in doc["states"]:
        st["g"][0]["h3"] = ["w0"]
        st["gstar"][0]["o1"].append(extra)
    snap = copy.deepcopy(SNAP_P0)
    snap["o1"].append(extra)
    for law in doc["laws"]:
        if law["property"] == 0:
            law["from"] = snap
            law["to"] = [snap]


def break_a3(doc):
    bad = ["h1", ["hi"]]
    doc["states"][0]["gstar"][1]["o1"].append(bad)
    snap = copy.deepcopy(SNAP_LO)
    snap["o1"].append(bad)
    for law in doc["laws"]:
        if law["property"] != 1:
            continue
        if law["from"] == SNAP_LO:
            law["from"] = snap
        law["to"] = [snap if t == SNAP_LO else t for t in law["to"]]


def break_a4(doc):
    acts = doc["signature"]["actions"]["o1"][1]
    stay = next(a for a in acts if a["id"] == "stay")
    stay["in"].append(rule("h2", ["lo"], ["lo"]))


def break_a5(doc):
    doc["states"][0]["es"]["o2"].append("h1")
    acts = doc["signature"]["actions"]["o2"]
    acts[0][0]["in"].append(rule("h1", ["w0"], ["w0"]))
    acts[1][0]["in"].append(rule("h1", ["lo"], ["lo"]))


def break_a6(doc):
    for dep in doc["dependencies"]:
        if dep["state"] == "s0" and dep["property"] == 1 and dep["actions"]["o1"] == "toggle":
            dep["deps"] = [["o1", "o2"]]


def break_a7(doc):
    for law in doc["laws"]:
        if law["property"] == 1 and law["from"] == SNAP_LO:
            law["to"] = [SNAP_LO]


def break_a8(doc):
    doc["states"][0]["theta"][1]["o1"].append("hold0")


def break_a9(doc):
    del doc["perspectives"][1]["moments"]["1"]


def break_a10(doc):
    doc["perspectives"][0]["succ"][0]["to"]["condition"] = "h"


def break_a11(doc):
    for fam in doc["sensation_laws"]:
        for entry in fam:
            if entry["object"] == "o1" and entry["state"] == "s0" and entry["input"] == STAY:
                entry["result"] = [["s", "c"]]


# ---------------------------------------------------------------- one-state loop
def loop_structure():
    idle = {"o1": ["idle"]}
    snap = {"o1": [["h1", ["w0"]]]}
    st = {
        "id": "s",
        "es": {"o1": ["h1"]},
        "g": [{"h1": ["w0"]}],
        "gstar": [snap],
        "theta": [{"o1": ["idle"]}],
        "sensation": {"o1": "empty"},
        "relations": {"o1": [[]]},
    }
    return {
        "signature": {
            "objects": ["o1"],
            "essences": ["h1"],
            "properties": [{"dim": 1, "domains": [["w0"]]}],
            "actions": {"o1": [[{"id": "idle", "in": [rule("h1", ["w0"], ["w0"])], "ext": []}]]},
            "sra": ["empty"],
        },
        "states": [st],
        "transition": [{"from": "s", "input": idle, "to": "s"}],
        "laws": [{"property": 0, "from": snap, "actions": {"o1": "idle"},
                  "deps": [], "to": [snap]}],
        "sensation_laws": [[{"register": "empty", "object": "o1", "state": "s",
                             "input": idle, "result": "empty"}]],
        "dependencies": [{"state": "s", "property": 0, "actions": {"o1": "idle"}, "deps": []}],
        "perspectives": [
            {
                "anchor": 1,
                "moments": {"1": [reality(1, "e", "present", "s")],
                            "2": [reality(2, "e", "future", "s")]},
                "realized_inputs": {"1": idle},
                "succ": [{"from": reality(1, "e", "present", "s"), "input": idle,
                          "to": reality(2, "e", "future", "s")}],
            },
            {
                "anchor": 2,
                "moments": {"1": [reality(1, "e", "past", "s")],
                            "2": [reality(2, "e", "present", "s")]},
                "realized_inputs": {"1": idle, "2": idle},
                "succ": [
                    {"from": reality(1, "e", "past", "s"), "input": idle,
                     "to": reality(2, "e", "present", "s")},
                    {"from": reality(2, "e", "present", "s"), "input": idle,
                     "to": reality(3, "e", "future", "s")},
                ],
            },
        ],
        "realized_inputs": {"1": idle, "2": idle},
    }


def main():
    dump("two-state-toggle.mmppf.json", toggle_structure())
    dump("one-state-loop.mmppf.json", loop_structure())
    breakers = [break_a1, break_a2, break_a3, break_a4, break_a5, break_a6,
                break_a7, break_a8, break_a9, break_a10, break_a11]
    for k, breaker in enumerate(breakers, start=1):
        doc = toggle_structure()
        breaker(doc)
        dump("violates-axiom-%02d.mmppf.json" % k, doc)


if __name__ == "__main__":
    main()
