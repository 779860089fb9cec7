"""Command-line harness.

Config files are plain text::

    n=3
    order:
    1 1 1
    0 1 1
    0 0 1
    section=insertion_sort
    maxlen=5

Only ``n=`` is mandatory. Without an ``order:`` block the numeric order
on ``0..n-1`` is used. Exit codes: 0 all checks pass, 1 a check failed,
2 usage or parse error.
"""
from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from typing import Optional

from freesort import orders, sorting
from freesort.orders import TotalOrder

#: red, red, blue, white, blue, red, white, blue with red=0, white=1, blue=2
DUTCH_FLAG_BAG = (0, 0, 2, 1, 2, 0, 1, 2)


class ConfigError(ValueError):
    pass


@dataclass
class RunConfig:
    carrier_size: int
    order_table: Optional[TotalOrder] = None
    section_name: Optional[str] = None
    max_word_len: int = sorting.DEFAULT_MAX_LEN

    def base_order(self) -> TotalOrder:
        return self.order_table or TotalOrder.numeric(self.carrier_size)


def _int(value: str, key: str) -> int:
    try:
        v = int(value)
    except ValueError:
        raise ConfigError(f"{key} must be an integer, got {value!r}") from None
    if v < 0:
        raise ConfigError(f"{key} must be non-negative")
    return v


def parse_config(text: str) -> RunConfig:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines or not lines[0].startswith("n="):
        raise ConfigError("first line must be n=<carrier_size>")
    cfg = RunConfig(_int(lines[0][2:], "n"))
    i = 1
    while i < len(lines):
        ln = lines[i]
        if ln == "order:":
            rows = lines[i + 1:i + 1 + cfg.carrier_size]
            if len(rows) < cfg.carrier_size or any("=" in r or r == "order:" for r in rows):
                raise ConfigError(f"order: needs {cfg.carrier_size} rows")
            try:
                cfg.order_table = orders.parse_table("\n".join(rows), cfg.carrier_size)
            except ValueError as e:
                raise ConfigError(str(e)) from None
            i += 1 + cfg.carrier_size
            continue
        key, sep, value = ln.partition("=")
        if not sep:
            raise ConfigError(f"cannot parse line {ln!r}")
        if key == "section":
            cfg.section_name = value
        elif key == "maxlen":
            cfg.max_word_len = _int(value, "maxlen")
        else:
            raise ConfigError(f"unknown key {key!r}")
        i += 1
    return cfg


def fmt_word(w) -> str:
    return "[" + ",".join(str(x) for x in w) + "]"


def fmt_tuple(t) -> str:
    return "(" + ",".join(str(x) for x in t) + ")"


def _axiom_line(v) -> str:
    if v.passed:
        return f"AXIOM {v.name}: PASS"
    w = v.witness
    if v.name == "well-defined":
        detail = f"{fmt_word(w[0])} {fmt_word(w[1])}"
    elif v.name == "section":
        detail = fmt_word(w[0])
    elif v.name == "head-least":
        x, y, xs = w
        detail = f"{fmt_word((x,) + xs)} y={y}"
    else:  # tail-sort
        x, xs = w
        detail = fmt_word((x,) + xs)
    return f"AXIOM {v.name}: FAIL witness={detail}"


def sample_bag(n: int) -> tuple:
    """The Dutch-flag bag for ``n == 3``, else each element twice, descending."""
    if n == 3:
        return DUTCH_FLAG_BAG
    return tuple(x for x in reversed(range(n)) for _ in range(2))


def cmd_check_order(cfg: RunConfig, out) -> int:
    if cfg.order_table is None:
        raise ConfigError("check-order needs an order: block")
    v = orders.check_total_order(cfg.order_table)
    if v:
        print("ORDER: PASS", file=out)
        return 0
    print(f"ORDER: FAIL {v.name} witness={fmt_tuple(v.witness)}", file=out)
    return 1


def _require_base(cfg: RunConfig, out) -> Optional[TotalOrder]:
    base = cfg.base_order()
    v = orders.check_total_order(base)
    if not v:
        print(f"ORDER: FAIL {v.name} witness={fmt_tuple(v.witness)}", file=out)
        return None
    return base


def cmd_certify(cfg: RunConfig, out) -> int:
    if cfg.section_name is None:
        raise ConfigError("certify needs section=<name>")
    base = _require_base(cfg, out)
    if base is None:
        return 1
    try:
        s = sorting.resolve_section(cfg.section_name, base, cfg.max_word_len)
    except KeyError:
        raise ConfigError(f"unknown section {cfg.section_name!r}") from None
    except ValueError as e:
        raise ConfigError(f"{cfg.section_name}: {e}") from None
    report = sorting.certify(s, base)
    print(f"SECTION {s.name} n={cfg.carrier_size} maxlen={cfg.max_word_len}", file=out)
    for v in (report.well_defined, report.is_section, report.head_least, report.tail_sort):
        print(_axiom_line(v), file=out)
    if report.derived_order is None:
        print("DERIVED ORDER: SKIPPED", file=out)
        return 1
    print("DERIVED ORDER:", file=out)
    print(orders.format_table(report.derived_order), file=out)
    for v in report.order_axiom_results:
        if v.passed:
            print(f"ORDER {v.name}: PASS", file=out)
        else:
            print(f"ORDER {v.name}: FAIL witness={fmt_tuple(v.witness)}", file=out)
    print(f"ORDER matches-base: {'PASS' if report.matches_base else 'FAIL'}", file=out)
    rt = report.roundtrip
    if rt.passed:
        print("ROUNDTRIP section: PASS", file=out)
    elif rt.name == "agree":
        print(f"ROUNDTRIP section: FAIL witness={fmt_word(rt.witness[0])}", file=out)
    else:
        print(f"ROUNDTRIP section: FAIL refused={rt.name}", file=out)
    return 0 if report.passed else 1


def cmd_enumerate(cfg: RunConfig, out) -> int:
    try:
        all_orders = orders.enumerate_total_orders(cfg.carrier_size)
    except orders.GuardError as e:
        raise ConfigError(str(e)) from None
    bag = sample_bag(cfg.carrier_size)
    for i, t in enumerate(all_orders, 1):
        s = sorting.insertion_sort(t, cfg.max_word_len)
        print(f"ORDER #{i}", file=out)
        print(orders.format_table(t), file=out)
        print(f"SORT {fmt_word(bag)} -> {fmt_word(s(bag))}", file=out)
    print(f"COUNT: {len(all_orders)}", file=out)
    return 0


COMMANDS = {
    "check-order": cmd_check_order,
    "certify": cmd_certify,
    "enumerate": cmd_enumerate,
}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = argparse.ArgumentParser(prog="freesort", description=__doc__.splitlines()[0])
    parser.add_argument("command", choices=sorted(COMMANDS))
    parser.add_argument("config", help="path to a config file, or - for stdin")
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code else 0
    try:
        if args.config == "-":
            text = sys.stdin.read()
        else:
            with open(args.config) as fh:
                text = fh.read()
        cfg = parse_config(text)
        return COMMANDS[args.command](cfg, out)
    except (OSError, ConfigError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
