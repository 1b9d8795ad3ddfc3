"""
Write every built-in fixture to data/fixtures/<name>.json as a rank file,
plus an index table data/fixtures/index.csv with sizes and ranks.
"""

import sys
from pathlib import Path

import pandas as pd
from loguru import logger
from tqdm import tqdm

# Add parent directory to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from src.cli.fixtures import EXPORT_INDEX, FIXTURES, in_corpus, load_fixture
from src.cli.formats import PolymatroidFile
from src.polycore import base_points
from src.storage.local_storage import local_storage


def export():
    rows = []
    for name in tqdm(FIXTURES, desc="Exporting fixtures", unit="fixture"):
        P = load_fixture(name)
        document = PolymatroidFile.from_polymatroid(P).model_dump(exclude_none=True)
        local_storage.save_json(name, document)
        rows.append({
            "fixture": name,
            "p": P.p,
            "rank": P.total_rank,
            "cage": ",".join(map(str, P.cage)),
            "base_points": len(base_points(P)),
            "in_corpus": in_corpus(P),
        })

    local_storage.save_dataframe(EXPORT_INDEX, pd.DataFrame(rows))
    logger.info(f"Exported {len(rows)} fixtures to {local_storage.data_dir}")


if __name__ == '__main__':
    export()
