# Anchors the test directory on sys.path so `import helpers` works.
