from importlib import resources

CATALOG_FILE = "theorems.json"


def read_catalog_text(name: str = CATALOG_FILE) -> str:
    """Read a JSON file shipped inside the installed catalog directory."""
    return (resources.files(__package__) / "catalog" / name).read_text(encoding="utf-8")
