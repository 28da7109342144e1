from expchar.cli.expr import lower_to_canonical, parse_canonical, parse_expression, render
from expchar.cli.main import main, run

__all__ = ["lower_to_canonical", "main", "parse_canonical", "parse_expression", "render", "run"]
