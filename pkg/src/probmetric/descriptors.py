"""
Descriptor text syntax.

Metrics:  kyfan:1/2  lp:2  linf  ind  prok:1  tv  sup(ind,tv)  hat(lp:1)
Gauges:   family:kyfan  family:prok  basis(ind,tv)  (a bare descriptor is a
one-element basis)
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DescriptorSyntaxError
from .gauges.gauge import Gauge, GaugeKind
from .metrics import METRIC_MAP, PARAMETRIZED, ProbabilityMetric, SupOf
from .minimal import MinimalMetric


def _split_arguments(body: str, text: str) -> list[str]:
    """Split on top-level commas."""
    parts, depth, start = [], 0, 0
    for k, ch in enumerate(body):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise DescriptorSyntaxError(f"unbalanced ')' in '{text}'")
        elif ch == "," and depth == 0:
            parts.append(body[start:k])
            start = k + 1
    if depth != 0:
        raise DescriptorSyntaxError(f"unbalanced '(' in '{text}'")
    parts.append(body[start:])
    if any(not p.strip() for p in parts):
        raise DescriptorSyntaxError(f"empty argument in '{text}'")
    return [p.strip() for p in parts]


def _call(text: str, name: str) -> str | None:
    """Body of `name(...)`, or None if text is not such a call."""
    if text.startswith(name + "(") and text.endswith(")"):
        return text[len(name) + 1 : -1]
    return None


def _parse_parameter(raw: str, text: str) -> Fraction:
    try:
        value = Fraction(raw)
    except (ValueError, ZeroDivisionError):
        raise DescriptorSyntaxError(f"bad parameter '{raw}' in '{text}'") from None
    if value <= 0:
        raise DescriptorSyntaxError(f"parameter must be positive in '{text}'")
    return value


def parse_descriptor(text: str) -> ProbabilityMetric:
    """
    Parse a metric descriptor.

    Raises:
        DescriptorSyntaxError: on unknown names, bad parameters or bad nesting.
    """
    text = text.strip()
    if not text:
        raise DescriptorSyntaxError("empty descriptor")
    body = _call(text, "sup")
    if body is not None:
        return SupOf(tuple(parse_descriptor(p) for p in _split_arguments(body, text)))
    body = _call(text, "hat")
    if body is not None:
        args = _split_arguments(body, text)
        if len(args) != 1:
            raise DescriptorSyntaxError(f"hat takes one descriptor: '{text}'")
        return MinimalMetric(parse_descriptor(args[0]))

    name, sep, raw = text.partition(":")
    name = name.strip().lower()
    cls = METRIC_MAP.get(name)
    if cls is None:
        known = ", ".join(sorted(METRIC_MAP))
        raise DescriptorSyntaxError(f"unknown metric '{name}' (known: {known}, sup, hat)")
    if name in PARAMETRIZED:
        if not sep:
            raise DescriptorSyntaxError(f"'{name}' needs a parameter, e.g. '{name}:1'")
        try:
            return cls(_parse_parameter(raw.strip(), text))  # type: ignore[call-arg]
        except ValueError as e:
            if isinstance(e, DescriptorSyntaxError):
                raise
            raise DescriptorSyntaxError(f"{e} in '{text}'") from None
    if sep:
        raise DescriptorSyntaxError(f"'{name}' takes no parameter")
    return cls()


def format_descriptor(desc: ProbabilityMetric) -> str:
    return desc.spec()


def parse_gauge(text: str) -> Gauge:
    """
    Parse a gauge: `family:kyfan`, `family:prok`, `basis(d1,...)` or a descriptor.

    Raises:
        DescriptorSyntaxError: on malformed input.
    """
    text = text.strip()
    if text.startswith("family:"):
        tag = text[len("family:") :].strip().lower()
        if tag == GaugeKind.KYFAN.value:
            return Gauge.ky_fan()
        if tag in (GaugeKind.PROKHOROV.value, "prokhorov"):
            return Gauge.prokhorov()
        raise DescriptorSyntaxError(f"unknown gauge family '{tag}' (known: kyfan, prok)")
    body = _call(text, "basis")
    if body is not None:
        return Gauge.finite(*(parse_descriptor(p) for p in _split_arguments(body, text)))
    return Gauge.finite(parse_descriptor(text))


def format_gauge(g: Gauge) -> str:
    return g.spec()
