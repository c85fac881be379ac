"""End-to-end checks of the fpreg command-line tool."""

import csv
import io
import json
import os
import subprocess
import sys
import tempfile
import unittest

import jsonschema

BINARY = os.environ.get("FPREG_BIN", "fpreg")
SCHEMA_PATH = os.environ.get("FPREG_SCHEMA", "docs/report-schema.json")

with open(SCHEMA_PATH) as fh:
    SCHEMA = json.load(fh)


def run(*args, check_code=0, env=None):
    proc = subprocess.run([BINARY, *args], capture_output=True, text=True, env=env, timeout=600)
    if check_code is not None and proc.returncode != check_code:
        raise AssertionError(
            f"{args}: exit {proc.returncode}, expected {check_code}\nstdout: {proc.stdout}\nstderr: {proc.stderr}")
    return proc


def report(*args):
    doc = json.loads(run(*args).stdout)
    jsonschema.validate(doc, SCHEMA)
    return doc


def without_timing(doc):
    doc = dict(doc)
    doc.pop("timing_ms")
    return doc


class Examples(unittest.TestCase):
    def test_count_ones(self):
        doc = report("count", "--p", "101", "--spec", "1,1,2", "--input", "ones")
        re, im = doc["results"]["T"]
        self.assertAlmostEqual(re, 1.0, places=12)
        self.assertAlmostEqual(im, 0.0, places=12)
        self.assertTrue(doc["oracle"]["passed"])

    def test_counterexample(self):
        doc = report("counterexample", "--p", "10007")
        self.assertEqual(doc["results"]["solutions"], 0)
        self.assertLess(abs(doc["results"]["ratio"] - 1 / 9), 0.01)

    def test_census(self):
        doc = report("census", "--p", "1009", "--spec", "1,1,2", "--colouring", "random", "--r", "3", "--seed", "7")
        res = doc["results"]
        self.assertEqual(len(res["mono_counts"]), 3)
        self.assertLessEqual(res["mono_total"], 1009 ** 2)
        self.assertEqual(sum(res["tensor"]), res["total_solutions"])
        self.assertEqual(doc["config"]["seed"], 7)


class Schema(unittest.TestCase):
    COMMANDS = [
        ["count", "--p", "61", "--input", "random"],
        ["count", "--p", "61", "--input", "counterexample", "--spec", "1,2,3"],
        ["norms", "--p", "31", "--input", "random"],
        ["norms", "--p", "211", "--input", "random", "--mode", "sampled", "--budget", "200"],
        ["gauss", "--p", "101"],
        ["census", "--p", "101", "--r", "2", "--colouring", "power_cosets"],
        ["scan", "--p", "101", "--r", "3", "--trials", "4"],
        ["counterexample", "--p", "1009"],
        ["decompose", "--p", "101", "--r", "2", "--delta", "0.3"],
        ["equidist", "--p", "101"],
        ["ramsey", "--N", "16", "--r", "2", "--trials", "3"],
        ["schur", "--N", "31", "--r", "2", "--trials", "3"],
        ["fiber", "--N", "20", "--eta", "0.2"],
        ["selftest"],
    ]

    def test_every_command_validates(self):
        for args in self.COMMANDS:
            with self.subTest(args=args):
                doc = report(*args)
                self.assertEqual(doc["command"], args[0])
                self.assertIn("seed", doc["config"])
                self.assertIn("threads", doc["config"])

    def test_config_replays(self):
        first = report("census", "--p", "101", "--r", "2", "--seed", "11")
        cfg = first["config"]
        again = report("census", "--p", str(cfg["p"]), "--r", str(cfg["r"]), "--seed", str(cfg["seed"]),
                       "--spec", cfg["spec"], "--colouring", cfg["colouring"])
        self.assertEqual(without_timing(first), without_timing(again))


class Determinism(unittest.TestCase):
    def test_selftest_twice(self):
        a = report("selftest", "--seed", "3")
        b = report("selftest", "--seed", "3")
        self.assertEqual(without_timing(a), without_timing(b))
        self.assertTrue(a["results"]["passed"])

    def test_thread_count_does_not_change_results(self):
        args = ["scan", "--p", "211", "--r", "2", "--trials", "5"]
        one = report(*args, "--threads", "1")
        two = report(*args, "--threads", "3")
        self.assertEqual(one["results"], two["results"])

    def test_env_thread_default(self):
        env = dict(os.environ, FPREG_THREADS="2")
        doc = json.loads(run("gauss", "--p", "31", env=env).stdout)
        self.assertEqual(doc["config"]["threads"], 2)


class Formats(unittest.TestCase):
    def test_csv_records(self):
        text = run("scan", "--p", "101", "--r", "2", "--trials", "3", "--format", "csv").stdout
        rows = list(csv.DictReader(io.StringIO(text)))
        self.assertEqual(len(rows), 3 + 3)
        self.assertEqual(set(rows[0]), {"colouring", "mono_total"})

    def test_csv_flat(self):
        text = run("counterexample", "--p", "1009", "--format", "csv").stdout
        rows = dict(csv.reader(io.StringIO(text)))
        self.assertEqual(rows["/results/solutions"], "0")
        self.assertEqual(rows["/config/p"], "1009")

    def test_output_file_and_colouring_file(self):
        with tempfile.TemporaryDirectory() as tmp:
            colouring = os.path.join(tmp, "c.txt")
            with open(colouring, "w") as fh:
                fh.write("13 2\n" + "".join(f"{1 + (x % 2)}\n" for x in range(13)))
            out = os.path.join(tmp, "report.json")
            run("census", "--p", "13", "--colouring-file", colouring, "--output", out)
            with open(out) as fh:
                doc = json.load(fh)
            jsonschema.validate(doc, SCHEMA)
            self.assertEqual(doc["results"]["class_sizes"], [7, 6])


class ExitCodes(unittest.TestCase):
    def test_config_errors(self):
        cases = [
            ["census", "--p", "12"],
            ["census", "--p", "2"],
            ["count", "--p", "101", "--spec", "1,x,2"],
            ["census", "--p", "101", "--colouring", "stripes"],
            ["census", "--p", "101", "--colouring", "file"],
            ["census", "--p", "101", "--colouring-file", "/nonexistent/colouring.txt"],
            ["norms", "--p", "1009", "--mode", "exact"],
            ["decompose", "--p", "101", "--delta", "0.3", "--R", "10"],
            ["equidist", "--p", "101", "--family", "99"],
            ["ramsey", "--N", "0"],
            ["nonsense"],
            ["census", "--p", "101", "--format", "xml"],
        ]
        for args in cases:
            with self.subTest(args=args):
                proc = run(*args, check_code=None)
                self.assertEqual(proc.returncode, 2, proc.stderr)
                self.assertEqual(proc.stdout, "")

    def test_help_is_success(self):
        self.assertIn("census", run("--help").stdout)


if __name__ == "__main__":
    unittest.main(argv=[sys.argv[0], "-v"])
