namespace smoothpatch {}
