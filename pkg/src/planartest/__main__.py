from planartest.harness.cli import run

run()
