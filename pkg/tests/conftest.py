import json
import threading
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from pathlib import Path

import pytest
from graphql import build_schema, graphql_sync

from gqla import parse

FIXTURES = Path(__file__).parent / "fixtures"

FRIENDS = "type Query { me: User } type User { name: String friends: [User] }"
REPOS = "type Query { repos: [Repo] } type Repo { name: String members: [User] } type User { login: String }"


@pytest.fixture(scope="session")
def company_sdl() -> str:
    return (FIXTURES / "company.graphql").read_text()


@pytest.fixture(scope="session")
def company(company_sdl):
    return parse(company_sdl)


class _GraphQLHandler(BaseHTTPRequestHandler):
    schema = None
    mode = "ok"

    def log_message(self, *args):
        pass

    def _reply(self, status, payload):
        body = json.dumps(payload).encode()
        self.send_response(status)
        self.send_header("Content-Type", "application/json")
        self.send_header("Content-Length", str(len(body)))
        self.end_headers()
        self.wfile.write(body)

    def do_POST(self):
        request = json.loads(self.rfile.read(int(self.headers["Content-Length"])))
        self.server.requests.append({"headers": dict(self.headers), "body": request})
        if self.server.mode == "unauthorized":
            return self._reply(401, {"message": "Bad credentials"})
        if self.server.mode == "disabled":
            return self._reply(200, {"errors": [{"message": "GraphQL introspection is not allowed"}]})
        if self.server.mode == "garbage":
            body = b"<html>not json</html>"
            self.send_response(200)
            self.send_header("Content-Length", str(len(body)))
            self.end_headers()
            return self.wfile.write(body)
        result = graphql_sync(self.server.schema, request["query"], operation_name=request.get("operationName"))
        payload = {"data": result.data}
        if result.errors:
            payload["errors"] = [e.formatted for e in result.errors]
        self._reply(200, payload)


@pytest.fixture
def graphql_server(company_sdl):
    """A local GraphQL endpoint serving the company schema; ``server.mode`` switches failure modes."""
    server = ThreadingHTTPServer(("127.0.0.1", 0), _GraphQLHandler)
    server.schema = build_schema(company_sdl)
    server.mode = "ok"
    server.requests = []
    thread = threading.Thread(target=server.serve_forever, kwargs={"poll_interval": 0.05}, daemon=True)
    thread.start()
    server.url = f"http://127.0.0.1:{server.server_address[1]}/graphql"
    yield server
    server.shutdown()
    server.server_close()


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
