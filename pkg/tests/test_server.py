import asyncio
from types import SimpleNamespace

import pytest

from tiltserver import server
from tiltserver.context_manager import AppContext, app_lifespan


@pytest.fixture
def ctx(settings, engine):
    context = AppContext(settings=settings, engine=engine)
    return SimpleNamespace(request_context=SimpleNamespace(lifespan_context=context))


def run(coroutine):
    return asyncio.run(coroutine)


def test_lifespan_builds_the_engine(clean_env):
    async def open_lifespan():
        async with app_lifespan(None) as context:
            return context

    context = run(open_lifespan())
    assert context.engine.settings is context.settings


def test_enumerate_pairs(ctx):
    reply = run(server.enumerate_pairs(ctx, algebra='{"kind":"cyclic","kupisch":[3,3,3]}', which="tau"))
    assert reply.startswith("10 pairs over cyclic Kupisch (3,3,3)")
    assert "1/3/2 + 2/1/3 + 3/2/1" in reply


def test_parse_errors_are_returned_as_text(ctx):
    reply = run(server.enumerate_pairs(ctx, algebra='{"kind": '))
    assert reply.startswith("Error parsing algebra")
    reply = run(server.enumerate_pairs(ctx, algebra='{"kind":"linear","kupisch":[1,3]}'))
    assert reply.startswith("Error (InvalidKupisch)")


def test_hasse_quiver_with_rejection_steps(ctx):
    reply = run(server.hasse_quiver(ctx, algebra='{"kind":"cyclic","kupisch":[2,2]}', method="rejection"))
    assert reply.startswith("// cyclic Kupisch (2,2): reject P_1")
    assert "digraph hasse {" in reply


def test_translate_model(ctx):
    reply = run(server.translate_model(ctx, source="seq", target="arcs", payload="2,1,0"))
    assert reply == "<*,1> <2,1> <*,2>"
    reply = run(server.translate_model(ctx, source="arcs", target="module", payload="<*,1> <2,1> <*,2>",
                                       algebra='{"kind":"cyclic","kupisch":[3,3,3]}'))
    assert reply == "1 + 1/3/2 + 2/1/3"


def test_list_triangulations(ctx):
    reply = run(server.list_triangulations(ctx, n=2))
    assert reply.startswith("3 triangulations")
    assert run(server.list_triangulations(ctx, n=20)).startswith("Error")


def test_count_pairs(ctx):
    reply = run(server.count_pairs(ctx, algebra='{"kind":"linear","kupisch":[1,2,3]}'))
    assert "recurrence" in reply
