"""
Pipeline step for building the diagram <-> tree table.

這個模組會：
1. 列舉 n <= n_max 的所有 rooted connected chord diagrams
2. 對每個 diagram 計算 T(C)、葉子標籤與 b(C)、f_C
3. 回傳 DataFrame（依 n、pairing 排序），需要時寫出 CSV
"""

from pathlib import Path
from typing import Optional, Union

import pandas as pd

from app.utils_io import write_csv
from chords.enumeration import DEFAULT_CONSTRUCTIVE_LIMIT, rccd
from chords.order import stats
from chords.trees import leaves, shape, to_tree

COLUMNS = ["n", "pairing", "letters", "tree", "shape", "leaf_labels", "b", "f_C"]


def build_table(
    n_max: int,
    out_dir: Optional[Union[str, Path]] = None,
    limit: int = DEFAULT_CONSTRUCTIVE_LIMIT,
) -> pd.DataFrame:
    """
    建立 diagram 與 tree 的對照表。

    Parameters
    ----------
    n_max : int
        最大 chord 數
    out_dir : str or Path, optional
        若有指定，CSV 會寫到 ``out_dir/diagram_tree_table_n{n_max}.csv``
    limit : int
        constructive 列舉的上限

    Returns
    -------
    df : pandas.DataFrame
        每個 diagram 一列
    """
    # 1. 逐一計算每個 diagram 的欄位
    rows = []
    for n in range(1, n_max + 1):
        for diagram in rccd(n, limit):
            tree = to_tree(diagram)
            s = stats(diagram)
            rows.append(
                {
                    "n": n,
                    "pairing": " ".join(str(p) for p in diagram.pairing),
                    "letters": diagram.letters(),
                    "tree": str(tree),
                    "shape": str(shape(tree)).replace("0", "*"),
                    "leaf_labels": " ".join(str(l) for l in leaves(tree)),
                    "b": s.b,
                    "f_C": str(s.monomial),
                }
            )
    df = pd.DataFrame(rows, columns=COLUMNS)

    # 2. 寫出 CSV
    if out_dir is not None:
        out_path = Path(out_dir)
        out_path.mkdir(parents=True, exist_ok=True)
        write_csv(df, str(out_path / f"diagram_tree_table_n{n_max}.csv"))

    return df
