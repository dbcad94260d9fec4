import numwall.cli

if __name__ == '__main__':
    numwall.cli.main()
