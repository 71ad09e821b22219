from .builders import ExampleBundle, submonoids_t3
from .registry import CORPUS, build_example, get_entry, list_examples

__all__ = [
    "CORPUS",
    "ExampleBundle",
    "build_example",
    "get_entry",
    "list_examples",
    "submonoids_t3",
]
