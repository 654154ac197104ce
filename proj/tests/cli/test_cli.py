#!/usr/bin/env python3
#
# Copyright 2026 The shadowcodes Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Exit codes, schemas and determinism of the shadowcodes command line.

Usage: test_cli.py <shadowcodes binary> <schema directory>
"""

import json
import pathlib
import subprocess
import sys
import tempfile
import unittest

import jsonschema

BINARY = None
SCHEMAS = None


def schema(name):
    return json.loads((SCHEMAS / f"{name}.schema.json").read_text())


def run(*args):
    return subprocess.run([BINARY, *map(str, args)], capture_output=True, text=True, timeout=300)


class CliTest(unittest.TestCase):
    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.dir = pathlib.Path(self.tmp.name)

    def tearDown(self):
        self.tmp.cleanup()

    def ok(self, name, *args):
        res = run(*args)
        self.assertEqual(res.returncode, 0, res.stderr)
        out = json.loads(res.stdout)
        jsonschema.validate(out, schema(name))
        return out

    def fails(self, code, error, *args):
        res = run(*args)
        self.assertEqual(res.returncode, code, res.stdout + res.stderr)
        err = json.loads(res.stderr.strip().splitlines()[-1])
        jsonschema.validate(err, schema("error"))
        self.assertEqual(err["error"], error)
        return err

    def golden_matrix(self):
        path = self.dir / "g.txt"
        self.ok("construct", "construct", "--q", 7, "--r", 2, "--poly", "1,0,1", "--poly", "3,1,1", "--out", path)
        return path

    def test_construct_golden_rows(self):
        path = self.dir / "g.txt"
        out = self.ok("construct", "construct", "--q", 7, "--r", 2, "--poly", "1,0,1", "--poly", "3,1,1",
                      "--out", path)
        self.assertEqual(path.read_text(), "7 2 2\n0011110\n1100011\n")
        self.assertEqual(out["rows"], ["0011110", "1100011"])
        self.assertEqual(out["analysis"]["d_exact"], 4)

    def test_construct_canonical_length_two(self):
        out = self.ok("construct", "construct", "--q", 7, "--r", 2, "--L", 2)
        self.assertEqual(out["polynomials"], [[1, 0, 1], [2, 0, 1]])
        self.assertEqual(out["rank"], 2)

    def test_construct_order_mismatch(self):
        self.fails(2, "order_mismatch", "construct", "--q", 8, "--r", 3, "--L", 1)
        self.fails(2, "order_mismatch", "construct", "--q", 8, "--r", 3, "--epsilon", 0.3)

    def test_construct_epsilon(self):
        out = self.ok("construct", "construct", "--q", 1301, "--r", 2, "--epsilon", 0.25)
        self.assertEqual(out["construction"]["L"], 6)
        self.assertEqual(out["construction"]["rank"], 6)
        self.assertGreaterEqual(out["analysis"]["d_exact"], 217)
        res = run("construct", "--q", 7, "--r", 2, "--epsilon", 0.25)
        self.assertEqual(res.returncode, 0)
        self.assertIn("warning", res.stderr)

    def test_construct_json_matrix_validates(self):
        path = self.dir / "m.json"
        self.ok("construct", "construct", "--q", 49, "--r", 3, "--L", 3, "--out", path, "--format", "json")
        matrix = json.loads(path.read_text())
        jsonschema.validate(matrix, schema("matrix"))
        out = self.ok("analyze", "analyze", "--matrix", path)
        self.assertEqual(out["n"], 49)

    def test_analyze_and_weights(self):
        csv = self.dir / "w.csv"
        out = self.ok("analyze", "analyze", "--matrix", self.golden_matrix(), "--weights-csv", csv)
        self.assertEqual(out["d_exact"], 4)
        self.assertEqual(out["weight_distribution"],
                         [{"weight": 0, "count": 1}, {"weight": 4, "count": 2}, {"weight": 6, "count": 1}])
        self.assertEqual(csv.read_text(), "weight,count\n0,1\n4,2\n6,1\n")

    def test_analyze_cap_and_parse_errors(self):
        err = self.fails(3, "too_large", "analyze", "--matrix", self.golden_matrix(), "--exhaustive-cap", 3)
        self.assertEqual(err["count"], 4)
        empty = self.dir / "empty.txt"
        empty.write_text("")
        self.fails(2, "parse_error", "analyze", "--matrix", empty)
        self.fails(2, "parse_error", "analyze", "--matrix", self.dir / "missing.txt")
        bad = self.dir / "bad.txt"
        bad.write_text("7 2 1\n00111\n")
        self.fails(2, "parse_error", "analyze", "--matrix", bad)

    def test_decode(self):
        m = self.golden_matrix()
        out = self.ok("decode", "decode", "--matrix", m, "--received", "??11110")
        self.assertEqual(out["message"], [1, 0])
        self.fails(2, "ambiguous", "decode", "--matrix", m, "--received", "???????")
        self.fails(2, "inconsistent", "decode", "--matrix", m, "--received", "1000000")

    def test_puncture(self):
        m = self.golden_matrix()
        out = self.ok("puncture", "puncture", "--matrix", m, "--positions", "0")
        self.assertEqual(out["q"], 6)
        self.assertEqual(out["rank"], 2)
        out = self.ok("puncture", "puncture", "--matrix", m, "--trailing", 2)
        self.assertEqual(out["rows"], ["00111", "11000"])
        self.fails(2, "bad_positions", "puncture", "--matrix", m, "--trailing", 7)
        self.fails(2, "bad_positions", "puncture", "--matrix", m, "--positions", "0,1,2,3,4,5,6")

    def test_bounds(self):
        out = self.ok("bounds", "bounds", "--n", 7, "--d", 4, "--r", 2)
        self.assertEqual((out["hamming"], out["gv"], out["plotkin"]), ("16", "2", "20"))
        out = self.ok("bounds", "bounds", "--n", 100, "--d", 49, "--k-range", "1:3")
        self.assertEqual(out["mceliece"]["value"], "400")
        self.assertEqual(len(out["spectral"]), 3)
        self.fails(2, "domain_error", "bounds", "--n", 7, "--d", 0)

    def test_compare_dg(self):
        res = run("compare-dg", "--m", 20, "--delta", 0.2)
        self.assertEqual(res.returncode, 0, res.stderr)
        lines = res.stdout.strip().splitlines()
        header = lines[0].split(",")
        row = dict(zip(header, lines[1].split(",")))
        self.assertEqual(row["d_dg"], "507904")
        self.assertEqual(row["q_m"], "1048583")
        self.assertEqual(row["distance_dominates"], "true")
        out = self.ok("compare_dg", "compare-dg", "--m", 12, "--delta", 0.2, "--format", "json")
        self.assertEqual(out[0]["m"], 12)
        self.fails(2, "domain_error", "compare-dg", "--m", 20, "--delta", 0.5)

    def test_charsum(self):
        res = run("charsum", "--q", 7, "--poly", "1,0,1", "--poly", "3,1,1")
        self.assertEqual(res.returncode, 0, res.stderr)
        self.assertEqual(res.stdout, "q,ell,max_sum,ratio_sqrt_q,argmax_exponents\n7,2,5,1.889822365,11\n")
        out = self.ok("charsum", "charsum", "--q", "7", "--ell", 2, "--format", "json")
        self.assertEqual(out[0]["max_signed"], -1)
        out = self.ok("charsum", "charsum", "--q", "1009", "--mode", "sum_gt_one", "--format", "json")
        self.assertTrue(out[0]["witness_found"])
        self.assertTrue(out[0]["identity_holds"])
        self.fails(3, "too_large", "charsum", "--q", 7, "--ell", 3, "--exhaustive-cap", 4)

    def test_next_prime_power(self):
        out = self.ok("next_prime_power", "next-prime-power", "--x", 1 << 20, "--odd")
        self.assertEqual(out["q"], 1048583)
        out = self.ok("next_prime_power", "next-prime-power", "--x", 7)
        self.assertEqual((out["q"], out["p"], out["ell"]), (8, 2, 3))

    def test_usage_errors(self):
        self.fails(2, "usage_error", "construct", "--q", 7, "--L", 2, "--epsilon", 0.2)
        self.fails(2, "usage_error", "frobnicate")

    def test_outputs_are_deterministic(self):
        cases = [
            ("construct", "--q", 1009, "--r", 2, "--L", 10),
            ("charsum", "--q", "509", "--ell", 12),
            ("bounds", "--n", 1000, "--d", 400, "--k-range", "1:4"),
        ]
        for args in cases:
            first = run(*args, "--workers", 1)
            again = run(*args, "--workers", 1)
            many = run(*args, "--workers", 4)
            self.assertEqual(first.returncode, 0, first.stderr)
            self.assertEqual(first.stdout, again.stdout)
            self.assertEqual(first.stdout, many.stdout)

    def test_sidecar_log(self):
        log = self.dir / "run.log"
        res = run("bounds", "--n", 7, "--d", 4, "--log", log)
        self.assertEqual(res.returncode, 0)
        record = json.loads(log.read_text().splitlines()[0])
        self.assertEqual(record["subcommand"], "bounds")
        self.assertEqual(record["exit_code"], 0)


if __name__ == "__main__":
    BINARY = sys.argv[1]
    SCHEMAS = pathlib.Path(sys.argv[2])
    unittest.main(argv=sys.argv[:1], verbosity=2)
