from expchar.cli.main import main

main()
