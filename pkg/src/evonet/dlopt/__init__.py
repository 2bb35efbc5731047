"""Gradient-descent toolkit used by the BP trainer and available standalone."""

from evonet.dlopt.dropout import dropout_infer, dropout_train
from evonet.dlopt.momentum import (
    LrSchedule,
    MomentumState,
    Optimizer,
    lr_at,
    momentum_step,
    nesterov_step,
)
from evonet.dlopt.normalization import (
    BatchNormCache,
    BatchNormState,
    apply_whitening,
    batchnorm_backward,
    batchnorm_forward,
    lcn,
    whiten,
)

__all__ = [
    "BatchNormCache", "BatchNormState", "LrSchedule", "MomentumState", "Optimizer",
    "apply_whitening", "batchnorm_backward", "batchnorm_forward", "dropout_infer",
    "dropout_train", "lcn", "lr_at", "momentum_step", "nesterov_step", "whiten",
]
