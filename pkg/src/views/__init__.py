from views.corrupt import router as corrupt_router
from views.decode import router as decode_router
from views.encode import router as encode_router
from views.experiment import router as experiment_router
from views.params import router as params_router
from views.selftest import router as selftest_router

ROUTERS = (
    params_router,
    encode_router,
    corrupt_router,
    decode_router,
    experiment_router,
    selftest_router,
)

__all__ = [
    "ROUTERS",
    "corrupt_router",
    "decode_router",
    "encode_router",
    "experiment_router",
    "params_router",
    "selftest_router",
]
