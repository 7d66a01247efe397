"""Regenerate the bundled synthetic corpora under corpus/.

Two corpora are produced:

  corpus/main  five groups of structurally similar methods planted among
               pair-distractors.  Every distractor shares at most two
               feature atoms with any group's seed pool, so one added atom
               always separates it; this keeps the clean-oracle and
               noisy-oracle simulations well behaved.
  corpus/bias  three groups whose distractors replicate most of the pool
               but break either the nesting or the sibling order, so the
               three inductive biases converge at measurably different
               speeds.

The files are deterministic; run this script only to regenerate after
editing the templates below, then re-extract the factbases.
"""

import itertools
import json
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent / "corpus"

PARAM_NAMES = ["a", "b", "c", "d", "e", "f"]
FIELD_SALTS = ["A", "B", "C", "D"]


class Group:
    """One ground-truth group: member templates plus pool feature snippets."""

    def __init__(self, name, method, param_type, members, features, pairs):
        self.name = name
        self.method = method          # method name shared by members
        self.param_type = param_type
        self.members = members        # list of (classname, source)
        self.features = features      # label -> distractor snippet builder
        self.pairs = pairs            # list of (label, label) to cover


def member_file(cls, body):
    return f"class {cls} {{\n{body}}}\n"


# --- main corpus groups -----------------------------------------------------


def g1():
    def body(p, noise_first):
        noise = f"        this.depth1 = this.depth1 + 1;\n"
        main = (
            f"        if (this.depth1 >= 11) {{\n"
            f"            while ({p}.remaining() > 12) {{\n"
            f"                advanceCursor1({p});\n"
            f"            }}\n"
            f"            if (this.limit1 == 13) {{\n"
            f"                emitToken1({p});\n"
            f"            }}\n"
            f"        }}\n"
        )
        inner = noise + main if noise_first else main + noise
        return (
            "    TokenSink1 sink;\n    int depth1;\n    int limit1;\n\n"
            f"    void scanTokens1(Cursor1 {p}) {{\n{inner}    }}\n"
        )

    members = [(f"Scanner1{s}", member_file(f"Scanner1{s}", body(p, i % 2 == 0)))
               for i, (s, p) in enumerate(zip(FIELD_SALTS,
                                              ["cursor", "cur", "handle", "stream"]))]
    features = {
        "type": lambda f: ("Cursor1 " + f, ""),
        "if0": lambda f: (None, f"        if (this.{f} >= 11) {{ this.{f} = 901; }}\n"),
        "loop0": lambda f: (None, f"        while (this.sink9.poll() > 12) {{ this.{f} = 902; }}\n"),
        "call0": lambda f: (None, f"        advanceCursor1(this.{f});\n"),
        "if1": lambda f: (None, f"        if (this.{f} == 13) {{ this.{f} = 903; }}\n"),
        "call1": lambda f: (None, f"        emitToken1(this.{f});\n"),
    }
    order = ["type", "if0", "loop0", "call0", "if1", "call1"]
    pairs = list(itertools.combinations(order, 2))[::2][:8]
    return Group("g1", "scanTokens1", "Cursor1", members, features, pairs)


def g2():
    def body(p, with_seal, noise_first):
        noise = "        this.posted2 = this.posted2 + 1;\n"
        main = (
            f"        if (this.posted2 >= 21) {{\n"
            f"            while ({p}.backlog() > 22) {{\n"
            f"                applyEntry2({p});\n"
            f"            }}\n"
            f"            if (this.cap2 == 23) {{\n"
            f"                rejectEntry2({p});\n"
            f"            }}\n"
            f"        }}\n"
        )
        seal = f"        sealLedger2({p});\n" if with_seal else ""
        inner = (noise + main if noise_first else main + noise) + seal
        return (
            "    Account2 book;\n    int posted2;\n    int cap2;\n\n"
            f"    void postLedger2(Batch2 {p}) {{\n{inner}    }}\n"
        )

    names = ["batch", "chunk", "lot", "feed"]
    members = []
    for i, (s, p) in enumerate(zip(FIELD_SALTS, names)):
        # the last member misses the trailing call: annotating it costs recall
        members.append((f"Ledger2{s}",
                        member_file(f"Ledger2{s}", body(p, i < 3, i % 2 == 0))))
    features = {
        "type": lambda f: ("Batch2 " + f, ""),
        "if0": lambda f: (None, f"        if (this.{f} >= 21) {{ this.{f} = 901; }}\n"),
        "loop0": lambda f: (None, f"        while (this.book9.poll() > 22) {{ this.{f} = 902; }}\n"),
        "call0": lambda f: (None, f"        applyEntry2(this.{f});\n"),
        "if1": lambda f: (None, f"        if (this.{f} == 23) {{ this.{f} = 903; }}\n"),
        "call1": lambda f: (None, f"        rejectEntry2(this.{f});\n"),
        "call2": lambda f: (None, f"        sealLedger2(this.{f});\n"),
    }
    order = ["type", "if0", "loop0", "call0", "if1", "call1", "call2"]
    pairs = list(itertools.combinations(order, 2))[::2][:8]
    return Group("g2", "postLedger2", "Batch2", members, features, pairs)


def g3():
    def body(p, noise_first):
        noise = "        this.frames3 = 0;\n"
        main = (
            f"        while (this.frames3 < 31) {{\n"
            f"            stepFrame3({p});\n"
            f"            this.frames3 = this.frames3 + 1;\n"
            f"        }}\n"
            f"        if ({p}.dirty() == 32) {{\n"
            f"            if (this.mode3 >= 33) {{\n"
            f"                blitFrame3({p});\n"
            f"            }}\n"
            f"            clearFrame3({p});\n"
            f"        }}\n"
        )
        inner = noise + main if noise_first else main + noise
        return (
            "    Surface3 target;\n    int frames3;\n    int mode3;\n\n"
            f"    void paintFrames3(Canvas3 {p}) {{\n{inner}    }}\n"
        )

    params = ["canvas", "cv", "surface", "sheet", "panel"]
    members = [(f"Painter3{s}", member_file(f"Painter3{s}", body(p, i % 2 == 0)))
               for i, (s, p) in enumerate(zip(FIELD_SALTS + ["E"], params))]
    features = {
        "type": lambda f: ("Canvas3 " + f, ""),
        "loop0": lambda f: (None, f"        while (this.{f} < 31) {{ this.{f} = 901; }}\n"),
        "call0": lambda f: (None, f"        stepFrame3(this.{f});\n"),
        "if0": lambda f: (None, f"        if (this.gate9.poll() == 32) {{ this.{f} = 902; }}\n"),
        "if1": lambda f: (None, f"        if (this.{f} >= 33) {{ this.{f} = 903; }}\n"),
        "call1": lambda f: (None, f"        blitFrame3(this.{f});\n"),
        "call2": lambda f: (None, f"        clearFrame3(this.{f});\n"),
    }
    order = ["type", "loop0", "call0", "if0", "if1", "call1", "call2"]
    pairs = list(itertools.combinations(order, 2))[::2][:8]
    return Group("g3", "paintFrames3", "Canvas3", members, features, pairs)


def g4():
    def body(p, noise_first):
        noise = "        this.held4 = this.held4 + 1;\n"
        main = (
            f"        if (this.held4 >= 44) {{\n"
            f"            try {{\n"
            f"                while ({p}.free() > 45) {{\n"
            f"                    releaseBuffer4({p});\n"
            f"                }}\n"
            f"            }} catch (Overflow4 oops) {{\n"
            f"                trimBuffer4({p});\n"
            f"            }}\n"
            f"        }}\n"
            f"        if (this.held4 == 46) {{\n"
            f"            compactPool4({p});\n"
            f"        }}\n"
        )
        inner = noise + main if noise_first else main + noise
        return (
            "    Arena4 arena;\n    int held4;\n\n"
            f"    void recycleBuffers4(Pool4 {p}) {{\n{inner}    }}\n"
        )

    members = [(f"Recycler4{s}", member_file(f"Recycler4{s}", body(p, i % 2 == 0)))
               for i, (s, p) in enumerate(zip(FIELD_SALTS[:3],
                                              ["pool", "buffers", "slab"]))]
    features = {
        "type": lambda f: ("Pool4 " + f, ""),
        "if0": lambda f: (None, f"        if (this.{f} >= 44) {{ this.{f} = 901; }}\n"),
        "loop0": lambda f: (None, f"        while (this.arena9.poll() > 45) {{ this.{f} = 902; }}\n"),
        "call0": lambda f: (None, f"        releaseBuffer4(this.{f});\n"),
        "if1": lambda f: (None, f"        if (this.{f} == 46) {{ this.{f} = 903; }}\n"),
        "call1": lambda f: (None, f"        compactPool4(this.{f});\n"),
        "call2": lambda f: (None, f"        trimBuffer4(this.{f});\n"),
    }
    order = ["type", "if0", "loop0", "call0", "if1", "call1", "call2"]
    pairs = list(itertools.combinations(order, 2))[::2][:8]
    return Group("g4", "recycleBuffers4", "Pool4", members, features, pairs)


def g5():
    def body(p, noise_first):
        noise = "        this.hops5 = 55;\n"
        main = (
            f"        while (this.hops5 > 55) {{\n"
            f"            if ({p}.blocked() == 56) {{\n"
            f"                rerouteLeg5({p});\n"
            f"            }}\n"
            f"            advanceLeg5({p});\n"
            f"        }}\n"
            f"        if (this.cost5 >= 57) {{\n"
            f"            commitRoute5({p});\n"
            f"        }}\n"
        )
        inner = noise + main if noise_first else main + noise
        return (
            "    Atlas5 atlas;\n    int hops5;\n    int cost5;\n\n"
            f"    void planRoutes5(Graph5 {p}) {{\n{inner}    }}\n"
        )

    params = ["graph", "g", "network", "mesh", "grid", "web"]
    members = [(f"Planner5{s}", member_file(f"Planner5{s}", body(p, i % 2 == 0)))
               for i, (s, p) in enumerate(zip(FIELD_SALTS + ["E", "F"], params))]
    features = {
        "type": lambda f: ("Graph5 " + f, ""),
        "loop0": lambda f: (None, f"        while (this.{f} > 55) {{ this.{f} = 901; }}\n"),
        "if0": lambda f: (None, f"        if (this.atlas9.poll() == 56) {{ this.{f} = 902; }}\n"),
        "call0": lambda f: (None, f"        rerouteLeg5(this.{f});\n"),
        "call1": lambda f: (None, f"        advanceLeg5(this.{f});\n"),
        "if1": lambda f: (None, f"        if (this.{f} >= 57) {{ this.{f} = 903; }}\n"),
        "call2": lambda f: (None, f"        commitRoute5(this.{f});\n"),
    }
    order = ["type", "loop0", "if0", "call0", "call1", "if1", "call2"]
    pairs = list(itertools.combinations(order, 2))[::2][:8]
    return Group("g5", "planRoutes5", "Graph5", members, features, pairs)


def write_pairs(group, outdir):
    """Pair-distractors: exactly two pool features, flat, plus noise."""
    cls = f"Pairs{group.name.upper()}"
    lines = [f"class {cls} {{", "    Probe9 sink9;", "    Probe9 book9;",
             "    Probe9 arena9;", "    Probe9 gate9;", "    Probe9 atlas9;"]
    fields = set()
    methods = []
    for pi, (fa, fb) in enumerate(group.pairs):
        for copy in range(4):
            field = f"mark{pi}{copy}"
            fields.add(field)
            param_bits = []
            stmts = []
            for label in (fa, fb):
                param, stmt = group.features[label](field)
                if param:
                    param_bits.append(param)
                if stmt:
                    stmts.append(stmt)
            stmts.append(f"        this.{field} = 909;\n")
            params = ", ".join(param_bits) if param_bits else "int depth9"
            name = f"pd_{group.name}_{pi}_{copy}"
            methods.append(
                f"\n    void {name}({params}) {{\n" + "".join(stmts) + "    }\n")
    for f in sorted(fields):
        lines.append(f"    int {f};")
    src = "\n".join(lines) + "\n" + "".join(methods) + "}\n"
    (outdir / f"{cls}.java").write_text(src, encoding="utf-8")


def write_noise(outdir):
    body = ["class NoiseBag {", "    int count9;", "    Probe9 sink9;"]
    for i in range(10):
        body.append(
            f"\n    void churn{i}(int seed9) {{\n"
            f"        this.count9 = seed9 + {910 + i};\n"
            f"        if (this.count9 >= {920 + i}) {{\n"
            f"            this.count9 = 0;\n"
            f"        }}\n"
            f"        while (this.sink9.poll() > {930 + i}) {{\n"
            f"            noiseStep9(this.count9);\n"
            f"        }}\n"
            f"    }}\n")
    body.append("}\n")
    (outdir / "NoiseBag.java").write_text("\n".join(body), encoding="utf-8")


# --- bias corpus -------------------------------------------------------------


def b_structure(idx, noun, verb, probe):
    """Nested-chain group; probers flatten the chain.

    Probers keep the statement order but hoist every block to the top
    level, so a containment atom rules out all of them at once while an
    existence atom only catches the family missing that feature.  The
    missing pairs overlap pairwise, leaving the flat existence bias a
    choice of single-feature kills.
    """
    lo = idx * 10 + 1

    def body(p):
        return (
            f"    Probe9 track9;\n    int stage{idx};\n    int retry{idx};\n\n"
            f"    void {verb}{idx}({noun}{idx} {p}) {{\n"
            f"        if (this.stage{idx} >= {lo}) {{\n"
            f"            while ({p}.{probe}() > {lo + 1}) {{\n"
            f"                drain{noun}{idx}({p});\n"
            f"            }}\n"
            f"            if (this.retry{idx} == {lo + 2}) {{\n"
            f"                log{noun}{idx}({p});\n"
            f"            }}\n"
            f"        }}\n"
            f"        seal{noun}{idx}({p});\n"
            f"        audit{noun}{idx}({p});\n"
            f"        verify{noun}{idx}({p});\n"
            f"    }}\n")

    members = [(f"{noun}{idx}{s}", member_file(f"{noun}{idx}{s}", body(p)))
               for s, p in zip(FIELD_SALTS, ["gate", "latch", "valve", "hatch"])]

    def prober(name, p, omit):
        stmts = [
            f"        if (this.stage{idx} >= {lo}) {{ this.stage{idx} = 0; }}\n",
            f"        while ({p}.{probe}() > {lo + 1}) {{ this.stage{idx} = 0; }}\n",
            f"        drain{noun}{idx}({p});\n",
            f"        if (this.retry{idx} == {lo + 2}) {{ this.retry{idx} = 0; }}\n",
            f"        log{noun}{idx}({p});\n",
            f"        seal{noun}{idx}({p});\n",
            f"        audit{noun}{idx}({p});\n",
            f"        verify{noun}{idx}({p});\n",
        ]
        slot = {"seal": 5, "audit": 6, "verify": 7}
        for d in sorted((slot[o] for o in omit), reverse=True):
            del stmts[d]
        return (f"\n    void {name}({noun}{idx} {p}) {{\n" + "".join(stmts)
                + "    }\n")

    probers = []
    for copy in range(2):
        p = ["gx", "gy"][copy]
        probers.append(prober(f"flat_{idx}_sa{copy}", p, ["seal", "audit"]))
        probers.append(prober(f"flat_{idx}_sv{copy}", p, ["seal", "verify"]))
        probers.append(prober(f"flat_{idx}_av{copy}", p, ["audit", "verify"]))
    cls = f"Flat{noun}{idx}"
    src = (f"class {cls} {{\n    int stage{idx};\n    int retry{idx};\n"
           + "".join(probers) + "}\n")
    return members, [(cls, src)], f"{verb}{idx}", f"{noun}{idx}"


def b_order(idx, noun, verb):
    """Flat ordered group; probers keep nesting but reverse the order."""
    lo = idx * 10 + 1

    def block(p, which):
        if which == "prime":
            return (f"        if (this.queue{idx} >= {lo}) {{\n"
                    f"            prime{noun}{idx}({p});\n        }}\n")
        if which == "shift":
            return (f"        while ({p}.backlog() > {lo + 1}) {{\n"
                    f"            shift{noun}{idx}({p});\n        }}\n")
        if which == "alert":
            return (f"        if (this.fault{idx} == {lo + 2}) {{\n"
                    f"            alert{noun}{idx}({p});\n        }}\n")
        return f"        close{noun}{idx}({p});\n"

    def body(p):
        inner = "".join(block(p, w) for w in ["prime", "shift", "alert", "close"])
        return (f"    Probe9 wire9;\n    int queue{idx};\n    int fault{idx};\n\n"
                f"    void {verb}{idx}({noun}{idx} {p}) {{\n{inner}    }}\n")

    members = [(f"{noun}{idx}{s}", member_file(f"{noun}{idx}{s}", body(p)))
               for s, p in zip(FIELD_SALTS, ["feed", "tap", "line", "pipe"])]

    def prober(name, p, omit):
        # blocks keep their own nesting but run in reverse order, with the
        # trailing call moved to the front when it survives the omission
        order = ["close", "alert", "shift", "prime"]
        stmts = [block(p, w) for w in order if w not in omit]
        return (f"\n    void {name}({noun}{idx} {p}) {{\n" + "".join(stmts)
                + "    }\n")

    probers = []
    for copy in range(2):
        p = ["fx", "fy"][copy]
        probers.append(prober(f"swap_{idx}_ca{copy}", p, ["close", "alert"]))
        probers.append(prober(f"swap_{idx}_cp{copy}", p, ["close", "prime"]))
        probers.append(prober(f"swap_{idx}_ap{copy}", p, ["alert", "prime"]))
    cls = f"Swap{noun}{idx}"
    src = (f"class {cls} {{\n    int queue{idx};\n    int fault{idx};\n"
           + "".join(probers) + "}\n")
    return members, [(cls, src)], f"{verb}{idx}", f"{noun}{idx}"


# --- emit --------------------------------------------------------------------


def emit_main():
    root = ROOT / "main"
    groups = [g1(), g2(), g3(), g4(), g5()]
    manifest = {"name": "main", "groups": []}
    for g in groups:
        gdir = root / g.name
        gdir.mkdir(parents=True, exist_ok=True)
        member_ids = []
        for cls, src in g.members:
            (gdir / f"{cls}.java").write_text(src, encoding="utf-8")
            sig = f"{g.method}({g.param_type})"
            member_ids.append(f"{g.name}/{cls}.java#{sig}#method0")
        manifest["groups"].append({"name": g.name, "members": member_ids})
    ddir = root / "distractors"
    ddir.mkdir(parents=True, exist_ok=True)
    for g in groups:
        write_pairs(g, ddir)
    write_noise(ddir)
    (root / "groups.json").write_text(
        json.dumps(manifest, indent=2) + "\n", encoding="utf-8")


def emit_bias():
    root = ROOT / "bias"
    specs = [
        ("b1",) + b_structure(6, "Gate", "flushStages", "pending"),
        ("b2",) + b_order(7, "Feed", "relayEvents"),
        ("b3",) + b_structure(8, "Loom", "weaveBatch", "queued"),
    ]
    manifest = {"name": "bias", "groups": []}
    for name, members, probers, method, ptype in specs:
        gdir = root / name
        gdir.mkdir(parents=True, exist_ok=True)
        member_ids = []
        for cls, src in members:
            (gdir / f"{cls}.java").write_text(src, encoding="utf-8")
            member_ids.append(f"{name}/{cls}.java#{method}({ptype})#method0")
        # probers live next to the members they imitate
        for cls, src in probers:
            (gdir / f"{cls}.java").write_text(src, encoding="utf-8")
        manifest["groups"].append({"name": name, "members": member_ids})
    (root / "groups.json").write_text(
        json.dumps(manifest, indent=2) + "\n", encoding="utf-8")


if __name__ == "__main__":
    emit_main()
    emit_bias()
    total = sum(1 for _ in ROOT.rglob("*.java"))
    print(f"wrote corpora under {ROOT} ({total} java files)")
