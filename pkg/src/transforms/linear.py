"""
GdmaLab 有限域线性代数

所有变换都是 N x N 核矩阵乘法，这里提供查表实现的矩阵乘与求逆，
以及各变换共用的基类。
"""

from abc import ABC
from typing import Any, Optional

import numpy as np

from ..exceptions import LengthMismatchError, SingularKernelMatrixError
from ..fields.base import TableField


def field_matmul(field: TableField, batch: np.ndarray, matrix: np.ndarray) -> np.ndarray:
    """
    batch @ matrix，域上精确运算

    Args:
        field: 查表域
        batch: (B, N) 或 (N,) 整数编码
        matrix: (N, K) 整数编码

    Returns:
        (B, K) 或 (K,)
    """
    batch = np.asarray(batch)
    single = batch.ndim == 1
    rows = np.atleast_2d(batch)
    add, mul = field.add_table, field.mul_table
    acc = np.zeros((rows.shape[0], matrix.shape[1]), dtype=np.int32)
    for i in range(matrix.shape[0]):
        acc = add[acc, mul[rows[:, i : i + 1], matrix[i][None, :]]]
    return acc[0] if single else acc


def identity_matrix(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.int32)


def invert_matrix(field: TableField, matrix: np.ndarray) -> np.ndarray:
    """
    Gauss-Jordan 消元求逆

    Raises:
        SingularKernelMatrixError: 矩阵奇异
    """
    n = matrix.shape[0]
    add, mul, neg, inv = field.add_table, field.mul_table, field.neg_table, field.inv_table
    work = np.concatenate([np.array(matrix, dtype=np.int32), identity_matrix(n)], axis=1)

    for col in range(n):
        pivots = np.nonzero(work[col:, col])[0]
        if pivots.size == 0:
            raise SingularKernelMatrixError(n, col)
        pivot = col + int(pivots[0])
        if pivot != col:
            work[[col, pivot]] = work[[pivot, col]]
        work[col] = mul[work[col], inv[work[col, col]]]
        for row in range(n):
            if row == col or work[row, col] == 0:
                continue
            factor = neg[work[row, col]]
            work[row] = add[work[row], mul[work[col], factor]]

    return work[:, n:].copy()


class FieldTransform(ABC):
    """
    核矩阵变换基类

    子类在构造时填好 forward_matrix / inverse_matrix。
    forward: X_k = Σ_i x_i F[i, k]；inverse: x_i = Σ_k X_k G[k, i]。
    """

    kind: str = "transform"

    def __init__(
        self,
        field: TableField,
        length: int,
        forward_matrix: np.ndarray,
        inverse_matrix: np.ndarray,
        kernel: Optional[Any] = None,
    ):
        self.field = field
        self.length = length
        self.kernel = kernel
        self.forward_matrix = forward_matrix.astype(np.int32)
        self.inverse_matrix = inverse_matrix.astype(np.int32)
        self.forward_matrix.setflags(write=False)
        self.inverse_matrix.setflags(write=False)

    @property
    def ground_order(self) -> int:
        """用户符号所在基域的大小 p"""
        return self.field.characteristic

    def _check_batch(self, batch: np.ndarray, what: str) -> np.ndarray:
        batch = np.asarray(batch, dtype=np.int64)
        if batch.shape[-1] != self.length:
            raise LengthMismatchError(self.length, batch.shape[-1], what)
        return batch

    def forward(self, batch: np.ndarray) -> np.ndarray:
        """批量正变换，batch 形状 (B, N) 或 (N,)"""
        return field_matmul(self.field, self._check_batch(batch, "signal"), self.forward_matrix)

    def inverse(self, batch: np.ndarray) -> np.ndarray:
        """批量逆变换"""
        return field_matmul(
            self.field, self._check_batch(batch, "spectrum"), self.inverse_matrix
        )

    def describe(self) -> str:
        return f"{self.kind.upper()} over {self.field!r}, N = {self.length}"


class IdentityTransform(FieldTransform):
    """不扩频的直通链路，用作纯调制基准"""

    kind = "identity"

    def __init__(self, field: TableField, length: int):
        eye = identity_matrix(length)
        super().__init__(field, length, eye, eye, kernel=None)

    def forward(self, batch: np.ndarray) -> np.ndarray:
        return np.asarray(self._check_batch(batch, "signal"), dtype=np.int32)

    def inverse(self, batch: np.ndarray) -> np.ndarray:
        return np.asarray(self._check_batch(batch, "spectrum"), dtype=np.int32)
