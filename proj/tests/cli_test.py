"""Behaviour of the permlab command line: outputs, exit codes, determinism and
JSON schemas.

usage: cli_test.py PERMLAB_EXE SCHEMA_DIR
"""

import json
import os
import subprocess
import sys
import tempfile
import unittest

import jsonschema

EXE = None
SCHEMAS = None
SPEC = ["--k", "3", "--tau", "2 1", "--alpha", "1 2 3 4"]


def run(*args, env=None):
    full_env = dict(os.environ)
    full_env.pop("PERMLAB_CACHE_DIR", None)
    if env:
        full_env.update(env)
    return subprocess.run([EXE, *args], capture_output=True, text=True, env=full_env, timeout=600)


def run_json(*args, env=None):
    proc = run("--format", "json", *args, env=env)
    return proc, json.loads(proc.stdout) if proc.stdout.strip() else None


def schema(name):
    with open(os.path.join(SCHEMAS, name + ".json")) as f:
        return json.load(f)


class TextOutput(unittest.TestCase):
    def test_sigma(self):
        proc = run("osc", "sigma", "4")
        self.assertEqual(proc.returncode, 0)
        self.assertEqual(proc.stdout, "3 1 4 2\n")

    def test_expand_split_end_series(self):
        proc = run("gf", "expand", "--num", "0,0,0,0,0,0,1", "--den", "1,-1", "--terms", "10")
        self.assertEqual(proc.returncode, 0)
        self.assertEqual(proc.stdout.strip(), "0,0,0,0,0,1,1,1,1,1")

    def test_contains_reports_one_based_positions(self):
        proc = run("perm", "contains", "3 9 1 8 6 7 4 5 2", "5 1 3 4 2")
        self.assertEqual(proc.returncode, 0)
        self.assertIn("2 3 5 6 7", proc.stdout)
        absent = run("perm", "contains", "1 2 3", "2 1")
        self.assertEqual(absent.returncode, 0)
        self.assertIn("not contained", absent.stdout)

    def test_family_and_classify(self):
        self.assertEqual(run("osc", "family", "4").stdout, "2 4 1 3\n3 1 4 2\n")
        out = run("osc", "classify", "3 1 4 2").stdout
        self.assertIn("decomposes", out)
        self.assertNotIn("neither", out)

    def test_dot_output(self):
        proc = run("perm", "graph", "3 1 4 2", "--dot")
        self.assertEqual(proc.returncode, 0)
        self.assertTrue(proc.stdout.startswith("graph G {"))
        self.assertIn("1 -- 2;", proc.stdout)

    def test_antichain_generating_function(self):
        proc = run("gf", "antichain", *SPEC, "--terms", "16")
        self.assertEqual(proc.returncode, 0)
        self.assertIn("0,0,0,0,0,0,0,0,0,0,0,1,2,2,3,4", proc.stdout)

    def test_closure_counts(self):
        proc = run("closure", "counts", *SPEC, "--max-len", "6")
        self.assertEqual(proc.returncode, 0)
        self.assertIn("1,2,6,23,85,293", proc.stdout)

    def test_output_file(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "sigma.txt")
            proc = run("--output", path, "osc", "sigma", "5")
            self.assertEqual(proc.returncode, 0)
            self.assertEqual(proc.stdout, "")
            with open(path) as f:
                self.assertEqual(f.read(), "3 1 5 2 4\n")


class ExitCodes(unittest.TestCase):
    def test_usage_errors(self):
        self.assertEqual(run("osc", "sigma", "4", "--bogus").returncode, 2)
        self.assertEqual(run("nonsense").returncode, 2)
        self.assertEqual(run("perm", "contains", "1 1", "1").returncode, 2)
        self.assertEqual(run("osc", "sigma", "3").returncode, 2)
        self.assertEqual(run("antichain", "spec-check", "--k", "3", "--alpha", "1 2 3 4").returncode, 2)

    def test_resource_error(self):
        tau = "1 2 3 4 5 6 7 8"
        alpha = "10 9 8 7 6 5 4 3 2 1"
        proc = run("antichain", "spec-check", "--k", "9", "--tau", tau, "--alpha", alpha)
        self.assertEqual(proc.returncode, 3)
        self.assertTrue(proc.stderr)

    def test_verification_failure(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "A.txt")
            with open(path, "w") as f:
                f.write("# a chain, not an antichain\n1 2\n1 2 3\n")
            proc = run("antichain", "spec-check", "--k", "3", "--alpha", "4 3 2 1", "--A-file", path)
            self.assertEqual(proc.returncode, 1)
            self.assertIn("FAIL", proc.stdout)

    def test_success(self):
        self.assertEqual(run("antichain", "spec-check", *SPEC).returncode, 0)
        self.assertEqual(run("antichain", "verify", "--split-end-paths", "--max-len", "14").returncode, 0)


class Determinism(unittest.TestCase):
    def test_repeated_runs_are_byte_identical(self):
        for args in (["antichain", "elements", *SPEC, "--max-len", "15"],
                     ["closure", "grammar", *SPEC, "--max-len", "6"],
                     ["gf", "closure-paper", *SPEC, "--terms", "12"]):
            for fmt in ("text", "json"):
                a = run("--format", fmt, *args)
                b = run("--format", fmt, *args)
                self.assertEqual(a.returncode, 0)
                self.assertEqual(a.stdout, b.stdout)

    def test_cache_directory_from_environment(self):
        with tempfile.TemporaryDirectory() as tmp:
            env = {"PERMLAB_CACHE_DIR": tmp}
            _, first = run_json("closure", "counts", *SPEC, "--max-len", "6", env=env)
            _, second = run_json("closure", "counts", *SPEC, "--max-len", "6", env=env)
            self.assertFalse(first["from_cache"])
            self.assertTrue(second["from_cache"])
            self.assertEqual(first["counts"], second["counts"])


class Schemas(unittest.TestCase):
    def check(self, name, *args, expect=0):
        proc, doc = run_json(*args)
        self.assertEqual(proc.returncode, expect, proc.stderr)
        jsonschema.validate(doc, schema(name))
        return doc

    def test_schemas_are_valid(self):
        for fname in sorted(os.listdir(SCHEMAS)):
            with open(os.path.join(SCHEMAS, fname)) as f:
                jsonschema.Draft202012Validator.check_schema(json.load(f))

    def test_perm(self):
        doc = self.check("perm_contains", "perm", "contains", "3 9 1 8 6 7 4 5 2", "5 1 3 4 2")
        self.assertEqual(doc["positions"], [2, 3, 5, 6, 7])
        self.check("perm_contains", "perm", "contains", "1 2 3", "2 1")
        doc = self.check("perm_inflate", "perm", "inflate", "2 4 1 3", "1", "1 3 2", "3 2 1", "1 2")
        self.assertEqual(doc["result"], [4, 7, 9, 8, 3, 2, 1, 5, 6])
        self.check("perm_patterns", "perm", "patterns", "3 1 4 2", "--length", "3")
        doc = self.check("perm_graph", "perm", "graph", "3 1 4 2")
        self.assertEqual(doc["edges"], [[1, 2], [1, 4], [3, 4]])
        doc = self.check("perm_decompose", "perm", "decompose", "6 8 7 2 1 9 3 4 5")
        self.assertEqual(doc["quotient"], [3, 1, 4, 2])

    def test_osc(self):
        self.assertEqual(self.check("osc_sigma", "osc", "sigma", "6")["sigma"], [3, 1, 5, 2, 6, 4])
        self.assertEqual(len(self.check("osc_family", "osc", "family", "7")["variants"]), 2)
        self.check("osc_classify", "osc", "classify", "2 4 1 5 3")

    def test_antichain(self):
        doc = self.check("antichain_elements", "antichain", "elements", *SPEC, "--max-len", "16")
        self.assertEqual(len(doc["elements"]), 12)
        self.check("antichain_verify", "antichain", "verify", *SPEC, "--max-len", "15")
        self.check("antichain_spec_check", "antichain", "spec-check", *SPEC)

    def test_gf(self):
        doc = self.check("gf_antichain", "gf", "antichain", *SPEC, "--terms", "16")
        self.assertAlmostEqual(doc["growth"]["rate"], 1.324717957, places=8)
        doc = self.check("gf_closure_paper", "gf", "closure-paper", *SPEC, "--terms", "6")
        self.assertEqual(doc["parts"]["series"]["coeffs"], ["1", "4", "14", "55", "200", "723"])
        self.check("gf_expand", "gf", "expand", "--num", "0,1", "--den", "1,-1,-1", "--terms", "6")
        doc = self.check("gf_growth", "gf", "growth", "--num", "1", "--den", "1,0,-2")
        self.assertFalse(doc["dominant_root"]["unique"])
        doc = self.check("gf_fit", "gf", "fit", "--series", "1,1,2,3,5,8,13,21,34,55,89,144",
                         "--max-den-degree", "3")
        self.assertEqual(doc["gf"]["den"], ["1", "-1", "-1"])

    def test_closure(self):
        doc = self.check("closure_counts", "closure", "counts", *SPEC, "--max-len", "7")
        self.assertEqual(doc["counts"], [1, 2, 6, 23, 85, 293, 956])
        doc = self.check("closure_member", "closure", "member", *SPEC, "2 1 3")
        self.assertTrue(doc["member"])
        doc = self.check("closure_member", "closure", "member", *SPEC, "5 4 3 2 1")
        self.assertFalse(doc["member"])
        doc = self.check("closure_grammar", "closure", "grammar", *SPEC, "--max-len", "7")
        self.assertEqual([r["raw"] for r in doc["rows"]], ["1", "4", "14", "55", "200", "723", "2591"])
        doc = self.check("closure_reconcile", "closure", "reconcile", *SPEC, "--max-len", "7")
        self.assertTrue(doc["sets_equal"])

    def test_class_and_superclass(self):
        with tempfile.TemporaryDirectory() as tmp:
            basis = os.path.join(tmp, "basis.txt")
            with open(basis, "w") as f:
                f.write("2 3 1\n")
            doc = self.check("class_counts", "class", "counts", "--basis", basis, "--max-len", "6")
            self.assertEqual(doc["counts"], ["1", "2", "5", "14", "42", "132"])
            with open(basis, "w") as f:
                f.write("1 2\n")
            doc = self.check("superclass_build", "superclass", "build", "--basis", basis, *SPEC,
                             "--max-len", "12")
            self.assertEqual(doc["threshold"], 12)
            self.assertTrue(doc["ok"])

    def test_verify(self):
        doc = self.check("verify_all", "verify", "all", "--only", "1,3,6")
        self.assertEqual([c["criterion"] for c in doc["criteria"]], [1, 3, 6])
        self.assertEqual(doc["failed"], 0)


if __name__ == "__main__":
    EXE, SCHEMAS = sys.argv[1], sys.argv[2]
    unittest.main(argv=sys.argv[:1], verbosity=2)
